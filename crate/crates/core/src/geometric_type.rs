//! Geometric types, their label sets, axiom validation and incidence matrices.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Mul, Neg};

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Orientation tag: `-1` or `+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn from_int(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn to_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Horizontal label `(i, j)`: the `j`-th horizontal sub-rectangle of rectangle `i` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HLabel {
    pub i: usize,
    pub j: usize,
}

/// Vertical label `(k, l)`: the `l`-th vertical sub-rectangle of rectangle `k` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VLabel {
    pub k: usize,
    pub l: usize,
}

impl HLabel {
    pub fn new(i: usize, j: usize) -> Self {
        HLabel { i, j }
    }
}

impl VLabel {
    pub fn new(k: usize, l: usize) -> Self {
        VLabel { k, l }
    }
}

impl fmt::Display for HLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

impl fmt::Display for VLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.k, self.l)
    }
}

/// A candidate quadruple as read from a file, before any axiom has been checked.
///
/// `rho` and `eps` are listed over the horizontal labels in lexicographic `(i, j)` order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawType {
    pub n: i64,
    pub hv: Vec<(i64, i64)>,
    pub rho: Vec<(i64, i64)>,
    pub eps: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.axiom, self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    fn push(&mut self, axiom: &'static str, detail: String) {
        self.ok = false;
        self.violations.push(Violation { axiom, detail });
    }
}

/// Checks every axiom of an abstract geometric type and reports all violations.
///
/// Out-of-range indices are reported, never panicked on.
pub fn validate(raw: &RawType) -> ValidationReport {
    let mut report = ValidationReport {
        ok: true,
        violations: Vec::new(),
    };

    if raw.n < 1 {
        report.push("positivity", format!("n={} must be at least 1", raw.n));
    }
    if raw.hv.len() as i64 != raw.n {
        report.push(
            "shape",
            format!("hv lists {} pairs but n={}", raw.hv.len(), raw.n),
        );
    }
    for (idx, &(h, v)) in raw.hv.iter().enumerate() {
        if h < 1 || v < 1 {
            report.push(
                "positivity",
                format!(
                    "rectangle {} has (h,v)=({},{}); both must be at least 1",
                    idx + 1,
                    h,
                    v
                ),
            );
        }
    }
    let sum_h: i64 = raw.hv.iter().map(|p| p.0.max(0)).sum();
    let sum_v: i64 = raw.hv.iter().map(|p| p.1.max(0)).sum();
    if sum_h != sum_v {
        report.push("balance", format!("Σh={sum_h} ≠ Σv={sum_v}"));
    }
    if raw.rho.len() as i64 != sum_h {
        report.push(
            "rho-total",
            format!(
                "rho lists {} images but there are {} horizontal labels",
                raw.rho.len(),
                sum_h
            ),
        );
    }
    if raw.eps.len() as i64 != sum_h {
        report.push(
            "eps-total",
            format!(
                "epsilon lists {} values but there are {} horizontal labels",
                raw.eps.len(),
                sum_h
            ),
        );
    }

    let sources = horizontal_labels_of(&raw.hv);
    let mut preimages: BTreeMap<(i64, i64), Vec<String>> = BTreeMap::new();
    for (pos, &(k, l)) in raw.rho.iter().enumerate() {
        let src = sources
            .get(pos)
            .map(|h| h.to_string())
            .unwrap_or_else(|| format!("#{}", pos + 1));
        let in_range =
            k >= 1 && (k as usize) <= raw.hv.len() && l >= 1 && l <= raw.hv[k as usize - 1].1;
        if !in_range {
            report.push(
                "rho-range",
                format!("rho{src}=({k},{l}) is not a vertical label"),
            );
        }
        preimages.entry((k, l)).or_default().push(src);
    }
    for ((k, l), srcs) in &preimages {
        if srcs.len() > 1 {
            report.push(
                "rho-bijective",
                format!(
                    "rho not injective: ({k},{l}) is the image of {}",
                    srcs.join(" and ")
                ),
            );
        }
    }
    for (pos, &e) in raw.eps.iter().enumerate() {
        if Sign::from_int(e).is_none() {
            let src = sources
                .get(pos)
                .map(|h| h.to_string())
                .unwrap_or_else(|| format!("#{}", pos + 1));
            report.push("eps-values", format!("epsilon{src}={e} must be -1 or 1"));
        }
    }
    report
}

fn horizontal_labels_of(hv: &[(i64, i64)]) -> Vec<HLabel> {
    hv.iter()
        .enumerate()
        .flat_map(|(i, &(h, _))| (1..=h.max(0) as usize).map(move |j| HLabel::new(i + 1, j)))
        .collect()
}

/// A validated geometric type `(n, {(h_i, v_i)}, rho, eps)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeometricType {
    hv: Vec<(usize, usize)>,
    rho: Vec<Vec<VLabel>>,
    eps: Vec<Vec<Sign>>,
    rho_inv: Vec<Vec<HLabel>>,
}

impl GeometricType {
    /// Validates a raw quadruple; all violations are joined into the error message.
    pub fn from_raw(raw: &RawType) -> Result<Self> {
        let report = validate(raw);
        if !report.ok {
            let msg: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            return Err(Error::Invalid(msg.join("; ")));
        }
        let hv: Vec<(usize, usize)> = raw
            .hv
            .iter()
            .map(|&(h, v)| (h as usize, v as usize))
            .collect();
        let mut rho = Vec::with_capacity(hv.len());
        let mut eps = Vec::with_capacity(hv.len());
        let mut flat = raw.rho.iter().zip(&raw.eps);
        for &(h, _) in &hv {
            let (r, e): (Vec<VLabel>, Vec<Sign>) = flat
                .by_ref()
                .take(h)
                .map(|(&(k, l), &e)| {
                    (
                        VLabel::new(k as usize, l as usize),
                        Sign::from_int(e).unwrap(),
                    )
                })
                .unzip();
            rho.push(r);
            eps.push(e);
        }
        let mut rho_inv: Vec<Vec<HLabel>> = hv
            .iter()
            .map(|&(_, v)| vec![HLabel::new(0, 0); v])
            .collect();
        for (i, row) in rho.iter().enumerate() {
            for (j, t) in row.iter().enumerate() {
                rho_inv[t.k - 1][t.l - 1] = HLabel::new(i + 1, j + 1);
            }
        }
        Ok(GeometricType {
            hv,
            rho,
            eps,
            rho_inv,
        })
    }

    /// Builds a type from `(h_i, v_i)` pairs and lexicographically ordered `rho` / `eps` tables.
    pub fn from_tables(
        hv: Vec<(usize, usize)>,
        rho: Vec<(usize, usize)>,
        eps: Vec<i64>,
    ) -> Result<Self> {
        GeometricType::from_raw(&RawType {
            n: hv.len() as i64,
            hv: hv.iter().map(|&(h, v)| (h as i64, v as i64)).collect(),
            rho: rho.iter().map(|&(k, l)| (k as i64, l as i64)).collect(),
            eps,
        })
    }

    pub fn to_raw(&self) -> RawType {
        RawType {
            n: self.n() as i64,
            hv: self.hv.iter().map(|&(h, v)| (h as i64, v as i64)).collect(),
            rho: self
                .rho
                .iter()
                .flatten()
                .map(|t| (t.k as i64, t.l as i64))
                .collect(),
            eps: self.eps.iter().flatten().map(|s| s.to_int()).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.hv.len()
    }

    pub fn hv(&self) -> &[(usize, usize)] {
        &self.hv
    }

    /// Number of horizontal sub-rectangles of rectangle `i` (1-based).
    pub fn h(&self, i: usize) -> usize {
        self.hv[i - 1].0
    }

    /// Number of vertical sub-rectangles of rectangle `k` (1-based).
    pub fn v(&self, k: usize) -> usize {
        self.hv[k - 1].1
    }

    pub fn alpha(&self) -> usize {
        self.hv.iter().map(|p| p.0).sum()
    }

    pub fn contains_h(&self, lbl: HLabel) -> bool {
        lbl.i >= 1 && lbl.i <= self.n() && lbl.j >= 1 && lbl.j <= self.h(lbl.i)
    }

    pub fn contains_v(&self, lbl: VLabel) -> bool {
        lbl.k >= 1 && lbl.k <= self.n() && lbl.l >= 1 && lbl.l <= self.v(lbl.k)
    }

    /// `rho(i, j)`. Panics on a label outside the type; callers check with [`contains_h`](Self::contains_h).
    pub fn rho(&self, lbl: HLabel) -> VLabel {
        self.rho[lbl.i - 1][lbl.j - 1]
    }

    pub fn eps(&self, lbl: HLabel) -> Sign {
        self.eps[lbl.i - 1][lbl.j - 1]
    }

    pub fn rho_inv(&self, lbl: VLabel) -> HLabel {
        self.rho_inv[lbl.k - 1][lbl.l - 1]
    }

    /// Horizontal labels in lexicographic order.
    pub fn h_labels(&self) -> impl Iterator<Item = HLabel> + '_ {
        self.hv
            .iter()
            .enumerate()
            .flat_map(|(i, &(h, _))| (1..=h).map(move |j| HLabel::new(i + 1, j)))
    }
}

/// Number of sub-rectangles, `Σ h_i = Σ v_i`.
pub fn alpha(t: &GeometricType) -> usize {
    t.alpha()
}

/// Square nonnegative integer matrix; `entry(i, k)` is 1-based like the rectangle indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncidenceMatrix {
    n: usize,
    entries: Vec<u64>,
}

impl IncidenceMatrix {
    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::Argument(
                "incidence matrix must be square and nonempty".into(),
            ));
        }
        Ok(IncidenceMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, k: usize) -> u64 {
        self.entries[(i - 1) * self.n + (k - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<u64>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    /// Whether the transition `a -> b` between symbols is allowed (`a_{ab} > 0`).
    pub fn allows(&self, a: usize, b: usize) -> bool {
        a >= 1 && b >= 1 && a <= self.n && b <= self.n && self.entry(a, b) > 0
    }

    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|&e| e <= 1)
    }

    /// Whether some power `A^N` with `N <= (n-1)^2 + 1` is entrywise positive.
    pub fn is_mixing(&self) -> bool {
        let n = self.n;
        let words = n.div_ceil(64);
        let mut base = vec![vec![0u64; words]; n];
        for (i, row) in base.iter_mut().enumerate() {
            for k in 0..n {
                if self.entries[i * n + k] > 0 {
                    row[k / 64] |= 1 << (k % 64);
                }
            }
        }
        let full: Vec<u64> = (0..words)
            .map(|w| {
                let bits = (n - w * 64).min(64);
                if bits == 64 {
                    u64::MAX
                } else {
                    (1u64 << bits) - 1
                }
            })
            .collect();
        let bound = (n - 1) * (n - 1) + 1;
        let mut power = base.clone();
        for step in 1..=bound {
            if power.iter().all(|row| row == &full) {
                return true;
            }
            if step == bound {
                break;
            }
            // (P * A) row i = OR of rows of A selected by row i of P
            power = power
                .iter()
                .map(|row| {
                    let mut acc = vec![0u64; words];
                    for (k, base_row) in base.iter().enumerate() {
                        if row[k / 64] >> (k % 64) & 1 == 1 {
                            for (a, b) in acc.iter_mut().zip(base_row) {
                                *a |= b;
                            }
                        }
                    }
                    acc
                })
                .collect();
        }
        false
    }

    /// Number of admissible words of length `m` (exact).
    pub fn word_count(&self, m: usize) -> Result<BigUint> {
        if m == 0 {
            return Err(Error::Argument("word length must be at least 1".into()));
        }
        if !self.is_binary() {
            return Err(Error::NotBinary);
        }
        let n = self.n;
        let mut ends = vec![BigUint::from(1u32); n];
        for _ in 1..m {
            let mut next = vec![BigUint::from(0u32); n];
            for (i, count) in ends.iter().enumerate() {
                for (k, slot) in next.iter_mut().enumerate() {
                    if self.entries[i * n + k] == 1 {
                        *slot += count;
                    }
                }
            }
            ends = next;
        }
        Ok(ends.into_iter().sum())
    }
}

impl fmt::Display for IncidenceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// `a_{ik}` = number of horizontal sub-rectangles of `R_i` sent into `R_k`.
pub fn incidence_matrix(t: &GeometricType) -> IncidenceMatrix {
    let n = t.n();
    let mut entries = vec![0u64; n * n];
    for lbl in t.h_labels() {
        entries[(lbl.i - 1) * n + t.rho(lbl).k - 1] += 1;
    }
    IncidenceMatrix { n, entries }
}

pub fn is_binary(a: &IncidenceMatrix) -> bool {
    a.is_binary()
}

pub fn is_mixing(a: &IncidenceMatrix) -> bool {
    a.is_mixing()
}

pub fn word_count(a: &IncidenceMatrix, m: usize) -> Result<BigUint> {
    a.word_count(m)
}

/// Necessary conditions for a type to come from a pseudo-Anosov map that the quadruple
/// axioms do not enforce. Types failing them still validate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Advisory {
    NotMixing,
    /// The forward orbit of this stable side only visits rectangles with `h = 1`, so the
    /// rectangle would collapse under iteration.
    CollapsingStableOrbit {
        label: String,
    },
    /// Same for an unstable side and rectangles with `v = 1`.
    CollapsingUnstableOrbit {
        label: String,
    },
}

impl Advisory {
    pub fn describe(&self) -> String {
        match self {
            Advisory::NotMixing => "incidence matrix is not mixing".to_string(),
            Advisory::CollapsingStableOrbit { label } => {
                format!("orbit of {label} never meets a rectangle with h>1")
            }
            Advisory::CollapsingUnstableOrbit { label } => {
                format!("orbit of {label} never meets a rectangle with v>1")
            }
        }
    }
}

/// Realizability advisories for `t`; empty when every check passes.
pub fn advisories(t: &GeometricType) -> Vec<Advisory> {
    use crate::boundary::{orbit, BoundaryLabel, Flavor};
    let mut out = Vec::new();
    if !incidence_matrix(t).is_mixing() {
        out.push(Advisory::NotMixing);
    }
    for flavor in [Flavor::S, Flavor::U] {
        for lbl in BoundaryLabel::all(t.n(), flavor) {
            let orb = orbit(t, lbl).expect("label in range");
            let wide = orb
                .transient
                .iter()
                .chain(&orb.cycle)
                .any(|l| match flavor {
                    Flavor::S => t.h(l.idx) > 1,
                    Flavor::U => t.v(l.idx) > 1,
                });
            if !wide {
                let label = lbl.to_string();
                out.push(match flavor {
                    Flavor::S => Advisory::CollapsingStableOrbit { label },
                    Flavor::U => Advisory::CollapsingUnstableOrbit { label },
                });
            }
        }
    }
    out
}
