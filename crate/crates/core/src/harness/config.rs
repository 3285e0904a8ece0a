use std::fmt::Write as _;
use std::path::Path;

use crate::assembly::BoundaryKind;
use crate::error::{Error, Result};
use crate::geometry::GridSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Planar,
    Axisymmetric,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scatterer {
    Cylinder,
    Sphere,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbcKind {
    Kfe,
    Wfe,
    Bgt1,
    Bgt2,
}

/// Error norm used for order fits over a grid sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitMetric {
    Domain,
    Boundary,
    Ffp,
}

/// One experiment, plus optional sweep lists. Every field can be set from a
/// `key = value` line; see [`ScatterConfig::set`] for the keys.
#[derive(Debug, Clone, PartialEq)]
pub struct ScatterConfig {
    pub name: String,
    pub dimension: Dimension,
    pub scatterer: Scatterer,
    pub boundary: BoundaryKind,
    pub k: f64,
    pub r0: f64,
    pub r_outer: f64,
    pub abc: AbcKind,
    pub terms: usize,
    pub degree: usize,
    pub grid: GridSpec,
    /// Gauss points per direction for assembly (`None`: `p + 1`).
    pub quadrature: Option<usize>,
    /// Gauss points per direction for error norms (`None`: `p + 2`).
    pub error_quadrature: Option<usize>,
    pub amplitude: f64,
    pub ffp_samples: usize,
    /// Record wall-clock seconds in the CSV (off keeps output byte-stable).
    pub timing: bool,
    pub fit_metric: FitMetric,
    /// `(key, values)` in declaration order; the sweep is their product.
    pub sweep: Vec<(String, Vec<String>)>,
    /// Lists of equal length that vary together, forming one extra
    /// (outermost) sweep dimension.
    pub zip: Vec<(String, Vec<String>)>,
}

impl Default for ScatterConfig {
    fn default() -> Self {
        ScatterConfig {
            name: "run".into(),
            dimension: Dimension::Planar,
            scatterer: Scatterer::Cylinder,
            boundary: BoundaryKind::Soft,
            k: std::f64::consts::TAU,
            r0: 1.0,
            r_outer: 2.0,
            abc: AbcKind::Kfe,
            terms: 5,
            degree: 2,
            grid: GridSpec::PerWavelength(20.0),
            quadrature: None,
            error_quadrature: None,
            amplitude: 1.0,
            ffp_samples: crate::reference::FFP_SAMPLES,
            timing: false,
            fit_metric: FitMetric::Boundary,
            sweep: Vec::new(),
            zip: Vec::new(),
        }
    }
}

fn bad(key: &str, value: &str) -> Error {
    Error::Config(format!("invalid value {value:?} for {key}"))
}

/// Number with an optional `pi` factor: `2`, `0.5pi`, `2*pi`, `pi`.
pub fn parse_real(value: &str) -> Option<f64> {
    let v = value.trim().to_ascii_lowercase();
    if let Some(head) = v.strip_suffix("pi") {
        let head = head.trim().trim_end_matches('*').trim();
        let factor = if head.is_empty() { 1.0 } else { head.parse::<f64>().ok()? };
        return Some(factor * std::f64::consts::PI);
    }
    v.parse().ok()
}

fn parse_usize(key: &str, value: &str) -> Result<usize> {
    value.trim().parse().map_err(|_| bad(key, value))
}

fn parse_bool(key: &str, value: &str) -> Result<bool> {
    match value.trim().to_ascii_lowercase().as_str() {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(bad(key, value)),
    }
}

fn optional_usize(key: &str, value: &str) -> Result<Option<usize>> {
    if value.trim() == "auto" {
        Ok(None)
    } else {
        parse_usize(key, value).map(Some)
    }
}

impl ScatterConfig {
    /// Parse `key = value` lines; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ScatterConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            cfg.set(key.trim(), value.trim())?;
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Apply a `key=value` override such as `NT=8` or `sweep.n_lambda=10,20`.
    pub fn apply_override(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Config(format!("override {assignment:?} is not key=value")))?;
        self.set(key.trim(), value.trim())
    }

    /// Set one key. Keys: `name`, `dimension` (2d, 3d-axisym), `scatterer`
    /// (cylinder, sphere), `bc` (soft, hard, 0, 1), `k`, `r0`, `R`, `abc`
    /// (kfe, wfe, bgt1, bgt2), `NT`, `p`, `n_lambda`, `elements` (`NexMe`),
    /// `quadrature`, `error_quadrature`, `amplitude`, `ffp_samples`,
    /// `timing`, `fit_metric` (domain, boundary, ffp), and `sweep.<key>` or
    /// `zip.<key>` with a comma-separated list.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        for (prefix, zipped) in [("sweep.", false), ("zip.", true)] {
            let Some(inner) = key.strip_prefix(prefix) else { continue };
            if inner.starts_with("sweep.") || inner.starts_with("zip.") {
                return Err(Error::Config(format!("nested list key {key:?}")));
            }
            let values: Vec<String> =
                value.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect();
            if values.is_empty() {
                return Err(Error::Config(format!("list for {inner} is empty")));
            }
            // Validate every entry up front.
            let mut probe = self.clone();
            for v in &values {
                probe.set(inner, v)?;
            }
            let lists = if zipped { &mut self.zip } else { &mut self.sweep };
            lists.retain(|(k, _)| k != inner);
            lists.push((inner.to_string(), values));
            return Ok(());
        }
        let real = |v: &str| parse_real(v).ok_or_else(|| bad(key, v));
        match key {
            "name" => self.name = value.to_string(),
            "dimension" => {
                self.dimension = match value.to_ascii_lowercase().as_str() {
                    "2d" | "planar" => Dimension::Planar,
                    "3d" | "3d-axisym" | "axisymmetric" => Dimension::Axisymmetric,
                    _ => return Err(bad(key, value)),
                }
            }
            "scatterer" => {
                self.scatterer = match value.to_ascii_lowercase().as_str() {
                    "cylinder" => Scatterer::Cylinder,
                    "sphere" => Scatterer::Sphere,
                    _ => return Err(bad(key, value)),
                }
            }
            "bc" | "Z" => {
                self.boundary = match value.to_ascii_lowercase().as_str() {
                    "soft" | "0" | "dirichlet" => BoundaryKind::Soft,
                    "hard" | "1" | "neumann" => BoundaryKind::Hard,
                    _ => return Err(bad(key, value)),
                }
            }
            "k" => self.k = real(value)?,
            "r0" | "r_0" => self.r0 = real(value)?,
            "R" | "r_outer" => self.r_outer = real(value)?,
            "abc" => {
                self.abc = match value.to_ascii_lowercase().as_str() {
                    "kfe" => AbcKind::Kfe,
                    "wfe" => AbcKind::Wfe,
                    "bgt1" | "bgt-1" => AbcKind::Bgt1,
                    "bgt2" | "bgt-2" => AbcKind::Bgt2,
                    _ => return Err(bad(key, value)),
                }
            }
            "NT" | "terms" => self.terms = parse_usize(key, value)?,
            "p" | "degree" => self.degree = parse_usize(key, value)?,
            "n_lambda" => self.grid = GridSpec::PerWavelength(real(value)?),
            "elements" => {
                let (a, b) = value
                    .to_ascii_lowercase()
                    .split_once('x')
                    .map(|(a, b)| (a.trim().to_string(), b.trim().to_string()))
                    .ok_or_else(|| bad(key, value))?;
                self.grid = GridSpec::Elements { radial: parse_usize(key, &a)?, angular: parse_usize(key, &b)? };
            }
            "radial_elements" => {
                let angular = match self.grid {
                    GridSpec::Elements { angular, .. } => angular,
                    GridSpec::PerWavelength(_) => return Err(Error::Config("set elements before radial_elements".into())),
                };
                self.grid = GridSpec::Elements { radial: parse_usize(key, value)?, angular };
            }
            "angular_elements" => {
                let radial = match self.grid {
                    GridSpec::Elements { radial, .. } => radial,
                    GridSpec::PerWavelength(_) => return Err(Error::Config("set elements before angular_elements".into())),
                };
                self.grid = GridSpec::Elements { radial, angular: parse_usize(key, value)? };
            }
            "quadrature" => self.quadrature = optional_usize(key, value)?,
            "error_quadrature" => self.error_quadrature = optional_usize(key, value)?,
            "amplitude" => self.amplitude = real(value)?,
            "ffp_samples" => self.ffp_samples = parse_usize(key, value)?,
            "timing" => self.timing = parse_bool(key, value)?,
            "fit_metric" => {
                self.fit_metric = match value.to_ascii_lowercase().as_str() {
                    "domain" => FitMetric::Domain,
                    "boundary" => FitMetric::Boundary,
                    "ffp" => FitMetric::Ffp,
                    _ => return Err(bad(key, value)),
                }
            }
            _ => return Err(Error::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |m: String| Err(Error::Config(m));
        if !(self.k > 0.0 && self.k.is_finite()) {
            return fail(format!("wavenumber must be positive, got {}", self.k));
        }
        if !(self.r0 > 0.0 && self.r_outer > self.r0 && self.r_outer.is_finite()) {
            return fail(format!("radii must satisfy 0 < r0 < R, got r0 = {}, R = {}", self.r0, self.r_outer));
        }
        if self.degree == 0 {
            return fail("basis degree must be at least 1".into());
        }
        if self.terms == 0 && matches!(self.abc, AbcKind::Kfe | AbcKind::Wfe) {
            return fail("NT must be at least 1".into());
        }
        match (self.dimension, self.abc) {
            (Dimension::Planar, AbcKind::Wfe) => return fail("WFE requires dimension = 3d-axisym".into()),
            (Dimension::Axisymmetric, a) if a != AbcKind::Wfe => {
                return fail("3d-axisym runs use abc = wfe".into());
            }
            _ => {}
        }
        match (self.dimension, self.scatterer) {
            (Dimension::Planar, Scatterer::Sphere) | (Dimension::Axisymmetric, Scatterer::Cylinder) => {
                return fail("cylinder pairs with 2d, sphere with 3d-axisym".into());
            }
            _ => {}
        }
        if let GridSpec::Elements { radial, angular } = self.grid {
            if radial == 0 || angular == 0 {
                return fail("element counts must be positive".into());
            }
        }
        if let GridSpec::PerWavelength(n) = self.grid {
            if !(n > 0.0 && n.is_finite()) {
                return fail(format!("n_lambda must be positive, got {n}"));
            }
        }
        if self.quadrature == Some(0) || self.error_quadrature == Some(0) {
            return fail("quadrature orders must be positive".into());
        }
        if self.ffp_samples == 0 {
            return fail("ffp_samples must be positive".into());
        }
        if !self.amplitude.is_finite() {
            return fail("amplitude must be finite".into());
        }
        Ok(())
    }

    /// Every combination of the sweep lists, zipped lists outermost, then
    /// sweep keys in declaration order with the last varying fastest.
    /// Without lists this is `[self]`.
    pub fn expand(&self) -> Result<Vec<ScatterConfig>> {
        let mut base = self.clone();
        base.sweep.clear();
        base.zip.clear();
        let mut out = vec![base];
        if let Some((_, first)) = self.zip.first() {
            if self.zip.iter().any(|(_, v)| v.len() != first.len()) {
                return Err(Error::Config("zipped lists must have equal lengths".into()));
            }
            let mut next = Vec::with_capacity(first.len());
            for i in 0..first.len() {
                let mut c = out[0].clone();
                for (key, values) in &self.zip {
                    c.set(key, &values[i])?;
                }
                next.push(c);
            }
            out = next;
        }
        for (key, values) in &self.sweep {
            let mut next = Vec::with_capacity(out.len() * values.len());
            for cfg in &out {
                for v in values {
                    let mut c = cfg.clone();
                    c.set(key, v)?;
                    next.push(c);
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Canonical `key = value` text that parses back to `self`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "name = {}", self.name);
        let _ = writeln!(s, "dimension = {}", self.dimension_label());
        let _ = writeln!(s, "scatterer = {}", self.scatterer_label());
        let _ = writeln!(s, "bc = {}", if self.boundary == BoundaryKind::Soft { "soft" } else { "hard" });
        let _ = writeln!(s, "k = {:?}", self.k);
        let _ = writeln!(s, "r0 = {:?}", self.r0);
        let _ = writeln!(s, "R = {:?}", self.r_outer);
        let _ = writeln!(s, "abc = {}", self.abc_label().to_ascii_lowercase().replace('-', ""));
        let _ = writeln!(s, "NT = {}", self.terms);
        let _ = writeln!(s, "p = {}", self.degree);
        match self.grid {
            GridSpec::PerWavelength(n) => {
                let _ = writeln!(s, "n_lambda = {n:?}");
            }
            GridSpec::Elements { radial, angular } => {
                let _ = writeln!(s, "elements = {radial}x{angular}");
            }
        }
        let auto = |q: Option<usize>| q.map_or("auto".to_string(), |v| v.to_string());
        let _ = writeln!(s, "quadrature = {}", auto(self.quadrature));
        let _ = writeln!(s, "error_quadrature = {}", auto(self.error_quadrature));
        let _ = writeln!(s, "amplitude = {:?}", self.amplitude);
        let _ = writeln!(s, "ffp_samples = {}", self.ffp_samples);
        let _ = writeln!(s, "timing = {}", self.timing);
        let metric = match self.fit_metric {
            FitMetric::Domain => "domain",
            FitMetric::Boundary => "boundary",
            FitMetric::Ffp => "ffp",
        };
        let _ = writeln!(s, "fit_metric = {metric}");
        for (key, values) in &self.zip {
            let _ = writeln!(s, "zip.{key} = {}", values.join(","));
        }
        for (key, values) in &self.sweep {
            let _ = writeln!(s, "sweep.{key} = {}", values.join(","));
        }
        s
    }

    pub fn dimension_label(&self) -> &'static str {
        match self.dimension {
            Dimension::Planar => "2d",
            Dimension::Axisymmetric => "3d-axisym",
        }
    }

    pub fn scatterer_label(&self) -> &'static str {
        match self.scatterer {
            Scatterer::Cylinder => "cylinder",
            Scatterer::Sphere => "sphere",
        }
    }

    pub fn abc_label(&self) -> &'static str {
        match self.abc {
            AbcKind::Kfe => "KFE",
            AbcKind::Wfe => "WFE",
            AbcKind::Bgt1 => "BGT-1",
            AbcKind::Bgt2 => "BGT-2",
        }
    }

    /// Whether the sweep only refines the grid, so an order fit is meaningful.
    pub fn is_grid_sweep(&self) -> bool {
        let lists = || self.sweep.iter().chain(&self.zip);
        lists().next().is_some()
            && lists().all(|(k, _)| matches!(k.as_str(), "n_lambda" | "elements" | "angular_elements" | "radial_elements"))
    }

    pub fn has_lists(&self) -> bool {
        !self.sweep.is_empty() || !self.zip.is_empty()
    }
}
