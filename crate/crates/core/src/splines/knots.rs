use crate::error::{domain, Error, Result};

/// A nondecreasing knot sequence together with the polynomial degree.
#[derive(Debug, Clone, PartialEq)]
pub struct KnotVector {
    knots: Vec<f64>,
    degree: usize,
}

/// A knot span of nonzero length, i.e. one element of the parametric mesh.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Span {
    /// Index `i` with `knots[i] <= xi < knots[i + 1]`.
    pub index: usize,
    pub start: f64,
    pub end: f64,
}

impl KnotVector {
    pub fn new(knots: Vec<f64>, degree: usize) -> Result<Self> {
        if knots.len() < 2 * (degree + 1) {
            return domain(format!(
                "knot vector of degree {degree} needs at least {} knots, got {}",
                2 * (degree + 1),
                knots.len()
            ));
        }
        if knots.iter().any(|k| !k.is_finite()) {
            return domain("knot values must be finite");
        }
        if knots.windows(2).any(|w| w[1] < w[0]) {
            return domain("knot vector must be nondecreasing");
        }
        let kv = KnotVector { knots, degree };
        let (a, b) = kv.domain();
        if !(b > a) {
            return domain("knot vector spans an empty parametric domain");
        }
        if let Some((value, m)) = kv.distinct().into_iter().find(|&(_, m)| m > degree + 1) {
            return domain(format!("knot {value} has multiplicity {m} > degree + 1"));
        }
        Ok(kv)
    }

    /// Open knot vector on `[a, b]` with `elements` equal spans and maximal
    /// continuity.
    pub fn open_uniform(degree: usize, elements: usize, a: f64, b: f64) -> Result<Self> {
        if elements == 0 {
            return domain("at least one element is required");
        }
        let breaks: Vec<f64> = (0..=elements)
            .map(|i| a + (b - a) * i as f64 / elements as f64)
            .collect();
        Self::open_from_breaks(degree, &breaks, &vec![1; elements.saturating_sub(1)])
    }

    /// Open knot vector with the given breakpoints; `interior` holds the
    /// multiplicity of every interior breakpoint.
    pub fn open_from_breaks(degree: usize, breaks: &[f64], interior: &[usize]) -> Result<Self> {
        if breaks.len() < 2 || interior.len() != breaks.len() - 2 {
            return domain("breakpoint and multiplicity counts disagree");
        }
        let mut knots = vec![breaks[0]; degree + 1];
        for (value, &m) in breaks[1..breaks.len() - 1].iter().zip(interior) {
            knots.extend(std::iter::repeat(*value).take(m));
        }
        knots.extend(std::iter::repeat(breaks[breaks.len() - 1]).take(degree + 1));
        Self::new(knots, degree)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn knots(&self) -> &[f64] {
        &self.knots
    }

    /// Number of basis functions `n = len - p - 1`.
    pub fn num_basis(&self) -> usize {
        self.knots.len() - self.degree - 1
    }

    /// Parametric domain `[knots[p], knots[n]]`.
    pub fn domain(&self) -> (f64, f64) {
        (self.knots[self.degree], self.knots[self.num_basis()])
    }

    pub fn is_open(&self) -> bool {
        let p = self.degree;
        let k = &self.knots;
        let last = k.len() - 1;
        k[..=p].iter().all(|&v| v == k[0]) && k[last - p..].iter().all(|&v| v == k[last])
    }

    /// Distinct knot values with their multiplicities.
    pub fn distinct(&self) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        for &k in &self.knots {
            match out.last_mut() {
                Some((v, m)) if *v == k => *m += 1,
                _ => out.push((k, 1)),
            }
        }
        out
    }

    pub fn multiplicity(&self, value: f64) -> usize {
        self.knots.iter().filter(|&&k| k == value).count()
    }

    /// Span index `i` in `[p, n - 1]` with `knots[i] <= xi < knots[i + 1]`;
    /// the right end of the domain belongs to the last nonzero span.
    pub fn find_span(&self, xi: f64) -> Result<usize> {
        let (a, b) = self.domain();
        let slack = 1e-14 * (b - a).abs().max(1.0);
        if !(xi >= a - slack && xi <= b + slack) {
            return Err(Error::Domain(format!(
                "parameter {xi} outside the knot domain [{a}, {b}]"
            )));
        }
        let p = self.degree;
        let n = self.num_basis();
        if xi >= self.knots[n] {
            let mut i = n - 1;
            while self.knots[i] == self.knots[i + 1] {
                i -= 1;
            }
            return Ok(i);
        }
        if xi <= a {
            let mut i = p;
            while self.knots[i] == self.knots[i + 1] {
                i += 1;
            }
            return Ok(i);
        }
        // knots[lo] <= xi < knots[hi]
        let mut lo = p;
        let mut hi = n;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if xi < self.knots[mid] {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(lo)
    }

    /// Nonzero knot spans inside the domain, in increasing order.
    pub fn spans(&self) -> Vec<Span> {
        let p = self.degree;
        (p..self.num_basis())
            .filter(|&i| self.knots[i + 1] > self.knots[i])
            .map(|i| Span { index: i, start: self.knots[i], end: self.knots[i + 1] })
            .collect()
    }

    /// Greville abscissae `(ξ_{i+1} + ... + ξ_{i+p}) / p`.
    pub fn greville(&self) -> Vec<f64> {
        let p = self.degree;
        if p == 0 {
            return (0..self.num_basis())
                .map(|i| 0.5 * (self.knots[i] + self.knots[i + 1]))
                .collect();
        }
        (0..self.num_basis())
            .map(|i| self.knots[i + 1..=i + p].iter().sum::<f64>() / p as f64)
            .collect()
    }
}
