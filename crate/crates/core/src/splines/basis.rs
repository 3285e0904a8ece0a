use super::knots::KnotVector;
use crate::error::{domain, Result};

/// The `p + 1` basis functions that are nonzero on one knot span, with first
/// and second parametric derivatives. Entry `a` belongs to global function
/// `span - p + a`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisEval {
    pub span: usize,
    pub values: Vec<f64>,
    pub first: Vec<f64>,
    pub second: Vec<f64>,
}

impl BasisEval {
    /// Global index of the first nonzero function.
    pub fn first_index(&self) -> usize {
        self.span + 1 - self.values.len()
    }
}

/// Cox–de Boor evaluation of the nonzero B-spline functions and their first
/// two derivatives at `xi`.
pub fn eval_bspline(kv: &KnotVector, xi: f64) -> Result<BasisEval> {
    let span = kv.find_span(xi)?;
    Ok(eval_bspline_in_span(kv, span, xi))
}

/// Same as [`eval_bspline`] with the span already known. `xi` may sit on the
/// span's closing knot (one-sided limit).
pub fn eval_bspline_in_span(kv: &KnotVector, span: usize, xi: f64) -> BasisEval {
    let p = kv.degree();
    let u = kv.knots();
    let nd = p.min(2);

    // ndu[j][r]: upper triangle holds basis values, lower triangle knot
    // differences.
    let mut ndu = vec![vec![0.0; p + 1]; p + 1];
    let mut left = vec![0.0; p + 1];
    let mut right = vec![0.0; p + 1];
    ndu[0][0] = 1.0;
    for j in 1..=p {
        left[j] = xi - u[span + 1 - j];
        right[j] = u[span + j] - xi;
        let mut saved = 0.0;
        for r in 0..j {
            ndu[j][r] = right[r + 1] + left[j - r];
            let temp = ndu[r][j - 1] / ndu[j][r];
            ndu[r][j] = saved + right[r + 1] * temp;
            saved = left[j - r] * temp;
        }
        ndu[j][j] = saved;
    }

    let mut ders = vec![vec![0.0; p + 1]; 3];
    for j in 0..=p {
        ders[0][j] = ndu[j][p];
    }
    let mut a = [vec![0.0; p + 1], vec![0.0; p + 1]];
    for r in 0..=p {
        let (mut s1, mut s2) = (0usize, 1usize);
        a[0][0] = 1.0;
        for k in 1..=nd {
            let mut d = 0.0;
            let rk = r as isize - k as isize;
            let pk = p - k;
            if r >= k {
                let rk = rk as usize;
                a[s2][0] = a[s1][0] / ndu[pk + 1][rk];
                d = a[s2][0] * ndu[rk][pk];
            }
            let j1 = if rk >= -1 { 1 } else { (-rk) as usize };
            let j2 = if r as isize - 1 <= pk as isize { k - 1 } else { p - r };
            for j in j1..=j2 {
                let idx = (rk + j as isize) as usize;
                a[s2][j] = (a[s1][j] - a[s1][j - 1]) / ndu[pk + 1][idx];
                d += a[s2][j] * ndu[idx][pk];
            }
            if r <= pk {
                a[s2][k] = -a[s1][k - 1] / ndu[pk + 1][r];
                d += a[s2][k] * ndu[r][pk];
            }
            ders[k][r] = d;
            std::mem::swap(&mut s1, &mut s2);
        }
    }
    let mut factor = p as f64;
    for k in 1..=nd {
        for v in ders[k].iter_mut() {
            *v *= factor;
        }
        factor *= (p - k) as f64;
    }

    let mut it = ders.into_iter();
    BasisEval {
        span,
        values: it.next().unwrap(),
        first: it.next().unwrap(),
        second: it.next().unwrap(),
    }
}

/// Rational basis `R_i = N_i w_i / W` over a knot vector.
#[derive(Debug, Clone, PartialEq)]
pub struct NurbsBasis {
    knots: KnotVector,
    weights: Vec<f64>,
}

impl NurbsBasis {
    pub fn new(knots: KnotVector, weights: Vec<f64>) -> Result<Self> {
        if weights.len() != knots.num_basis() {
            return domain(format!(
                "{} weights given for {} basis functions",
                weights.len(),
                knots.num_basis()
            ));
        }
        if weights.iter().any(|&w| !(w > 0.0) || !w.is_finite()) {
            return domain("NURBS weights must be positive and finite");
        }
        Ok(NurbsBasis { knots, weights })
    }

    /// Unit weights: the polynomial B-spline basis.
    pub fn bspline(knots: KnotVector) -> Self {
        let n = knots.num_basis();
        NurbsBasis { knots, weights: vec![1.0; n] }
    }

    pub fn knots(&self) -> &KnotVector {
        &self.knots
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn degree(&self) -> usize {
        self.knots.degree()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.weights.iter().all(|&w| w == self.weights[0])
    }

    pub fn eval(&self, xi: f64) -> Result<BasisEval> {
        let span = self.knots.find_span(xi)?;
        Ok(self.eval_in_span(span, xi))
    }

    pub fn eval_in_span(&self, span: usize, xi: f64) -> BasisEval {
        let mut b = eval_bspline_in_span(&self.knots, span, xi);
        let first = b.first_index();
        let w = &self.weights[first..first + b.values.len()];
        let (mut w0, mut w1, mut w2) = (0.0, 0.0, 0.0);
        for a in 0..b.values.len() {
            w0 += b.values[a] * w[a];
            w1 += b.first[a] * w[a];
            w2 += b.second[a] * w[a];
        }
        assert!(w0 > 0.0, "NURBS weight function must be positive");
        for a in 0..b.values.len() {
            let (n0, n1, n2) = (b.values[a], b.first[a], b.second[a]);
            let r = n0 * w[a] / w0;
            let r1 = (n1 * w[a] - r * w1) / w0;
            let r2 = (n2 * w[a] - 2.0 * r1 * w1 - r * w2) / w0;
            b.values[a] = r;
            b.first[a] = r1;
            b.second[a] = r2;
        }
        b
    }
}

/// Rational basis evaluation; identical to [`eval_bspline`] for unit weights.
pub fn eval_nurbs(basis: &NurbsBasis, xi: f64) -> Result<BasisEval> {
    basis.eval(xi)
}
