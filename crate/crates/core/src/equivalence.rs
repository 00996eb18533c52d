//! The identifications `~s`, `~u` and their alternating closure `~T`.
//!
//! Two codes are s-related when they describe the two sides of one stable boundary arc shared
//! by adjacent horizontal sub-rectangles `H^i_j`, `H^i_{j+1}`: they agree up to the pivot
//! position and then follow the two boundary codes forced by `rho` and `eps`. The u-side is
//! the same construction run backwards with `rho^{-1}` and negative codes.

use std::collections::{BTreeSet, HashSet, VecDeque};

use serde::Serialize;

use crate::boundary::{gamma, upsilon, BoundaryLabel};
use crate::code::{BiCode, OneSidedCode, Symbol};
use crate::error::{Error, Result};
use crate::geometric_type::incidence_matrix;
use crate::geometric_type::{GeometricType, HLabel, Sign, VLabel};
use crate::refinement::binary_refinement;
use crate::shift_space::Subshift;

/// Default cap on the size of a computed `~T` class.
pub const DEFAULT_CLASS_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    S,
    U,
}

/// Which of the two adjacency options links the pair.
///
/// `One`: the first code follows sub-rectangle `j` and the second follows `j + 1`.
/// `Two`: the other way round.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OptionCase {
    One,
    Two,
}

/// Data witnessing `w ~s v` (or `w ~u v`) for non-periodic codes.
///
/// For `~s`, `k` is the pivot position, `i = w_k = v_k` and `j` indexes the adjacent
/// horizontal sub-rectangles `(i, j), (i, j + 1)`. For `~u`, `k` is the pivot `z`, `i` the
/// shared rectangle and `j` the vertical index `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PartnerCertificate {
    pub relation: Relation,
    pub k: i64,
    pub i: Symbol,
    pub j: usize,
    pub case: OptionCase,
    pub delta_w: Sign,
    pub delta_v: Sign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainEdge {
    pub from: BiCode,
    pub relation: Relation,
    pub to: BiCode,
    /// Present for non-periodic pairs.
    pub certificate: Option<PartnerCertificate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub members: BTreeSet<BiCode>,
    pub chain: Vec<ChainEdge>,
    pub truncated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The refined types coincide; realizations are conjugate.
    SameInvariant,
    /// The refined types differ. This does not by itself rule out conjugacy.
    InvariantDistinct,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompareReport {
    pub structurally_equal: bool,
    /// Whether each input already had a binary incidence matrix.
    pub binary_a: bool,
    pub binary_b: bool,
    pub refined_a: GeometricType,
    pub refined_b: GeometricType,
    pub refined_equal: bool,
    pub verdict: Verdict,
}

/// One side (stable or unstable) of the identification machinery.
struct Side<'a> {
    sub: &'a Subshift,
    rel: Relation,
}

impl<'a> Side<'a> {
    fn t(&self) -> &GeometricType {
        self.sub.geometric_type()
    }

    fn member(&self, w: &BiCode, z: i64) -> bool {
        match self.rel {
            Relation::S => self.sub.s_boundary_at(w, z),
            Relation::U => self.sub.u_boundary_at(w, z),
        }
    }

    fn in_stratum(&self, w: &BiCode) -> bool {
        self.member(w, self.start(w))
    }

    // a position known to be a member when w is in the stratum
    fn start(&self, w: &BiCode) -> i64 {
        match self.rel {
            Relation::S => w.right_start().max(0),
            Relation::U => w.left_end().min(0),
        }
    }

    fn require(&self, w: &BiCode) -> Result<()> {
        self.sub.require_admissible(w)?;
        if !self.in_stratum(w) {
            let name = match self.rel {
                Relation::S => "s-leaf",
                Relation::U => "u-leaf",
            };
            return Err(Error::Stratum(format!("{w} is not an {name} code")));
        }
        Ok(())
    }

    /// Last position outside the stratum before entering it (s-side: scanning down; u-side:
    /// scanning up).
    fn pivot(&self, w: &BiCode) -> Result<i64> {
        if w.is_periodic() {
            return Err(Error::Periodic);
        }
        self.require(w)?;
        let n = self.t().n() as i64;
        let (step, bound) = match self.rel {
            Relation::S => (
                -1,
                w.left_end() - (2 * n + 1) * w.left_period().len() as i64 - 1,
            ),
            Relation::U => (
                1,
                w.right_start() + (2 * n + 1) * w.right_period().len() as i64 + 1,
            ),
        };
        let mut z = self.start(w);
        while self.member(w, z) {
            if z == bound {
                // only periodic codes stay inside the stratum this long
                return Err(Error::Periodic);
            }
            z += step;
        }
        Ok(z)
    }

    fn next(&self, p: i64) -> i64 {
        match self.rel {
            Relation::S => p + 1,
            Relation::U => p - 1,
        }
    }

    fn tail_code(&self, w: &BiCode, p: i64) -> OneSidedCode {
        match self.rel {
            Relation::S => w.positive_part_from(p + 1),
            Relation::U => w.negative_part_from(p - 1),
        }
    }

    fn shared_half(&self, w: &BiCode, p: i64) -> OneSidedCode {
        match self.rel {
            Relation::S => w.negative_part_from(p),
            Relation::U => w.positive_part_from(p),
        }
    }

    fn assemble(&self, shared: &OneSidedCode, tail: &OneSidedCode, p: i64) -> BiCode {
        match self.rel {
            Relation::S => BiCode::from_halves(shared, tail, p),
            Relation::U => BiCode::from_halves(tail, shared, p - 1),
        }
        .expect("halves have the right directions")
    }

    fn code_of(&self, lbl: BoundaryLabel) -> &OneSidedCode {
        self.sub.codes().code_of(lbl)
    }

    fn step(&self, lbl: BoundaryLabel) -> BoundaryLabel {
        match self.rel {
            Relation::S => gamma(self.t(), lbl),
            Relation::U => upsilon(self.t(), lbl),
        }
        .expect("label in range")
    }

    fn count(&self, c: Symbol) -> usize {
        match self.rel {
            Relation::S => self.t().h(c),
            Relation::U => self.t().v(c),
        }
    }

    /// The two boundary labels across the arc between sub-rectangles `j` and `j + 1` of `c`:
    /// the upper (right) side of `j` and the lower (left) side of `j + 1`, pushed forward
    /// (backward) once.
    fn pair(&self, c: Symbol, j: usize) -> (BoundaryLabel, BoundaryLabel) {
        let t = self.t();
        match self.rel {
            Relation::S => {
                let (a, b) = (HLabel::new(c, j), HLabel::new(c, j + 1));
                (
                    BoundaryLabel::s(t.rho(a).k, t.eps(a)),
                    BoundaryLabel::s(t.rho(b).k, -t.eps(b)),
                )
            }
            Relation::U => {
                let (a, b) = (
                    t.rho_inv(VLabel::new(c, j)),
                    t.rho_inv(VLabel::new(c, j + 1)),
                );
                (
                    BoundaryLabel::u(a.i, t.eps(a)),
                    BoundaryLabel::u(b.i, -t.eps(b)),
                )
            }
        }
    }

    /// Signs `δ` with `code = I⁺(first, δ)` (resp. `J⁻`).
    fn deltas(&self, code: &OneSidedCode, first: Symbol) -> Vec<Sign> {
        self.sub
            .codes()
            .labels_of(code)
            .iter()
            .filter(|l| l.idx == first)
            .map(|l| l.sign)
            .collect()
    }

    /// Checks conditions (i)-(v) for a pair of non-periodic codes.
    fn certify(&self, w: &BiCode, v: &BiCode) -> Result<Option<PartnerCertificate>> {
        let p = self.pivot(w)?;
        if self.pivot(v)? != p {
            return Ok(None);
        }
        let c = w.symbol_at(p);
        if v.symbol_at(p) != c || self.count(c) < 2 {
            return Ok(None);
        }
        if self.shared_half(w, p) != self.shared_half(v, p) {
            return Ok(None);
        }
        let (nw, nv) = (w.symbol_at(self.next(p)), v.symbol_at(self.next(p)));
        let dw = self.deltas(&self.tail_code(w, p), nw);
        let dv = self.deltas(&self.tail_code(v, p), nv);
        for j in 1..self.count(c) {
            let (a, b) = self.pair(c, j);
            let cert = |case, delta_w, delta_v| PartnerCertificate {
                relation: self.rel,
                k: p,
                i: c,
                j,
                case,
                delta_w,
                delta_v,
            };
            if a.idx == nw && b.idx == nv && dw.contains(&a.sign) && dv.contains(&b.sign) {
                return Ok(Some(cert(OptionCase::One, a.sign, b.sign)));
            }
            if a.idx == nv && b.idx == nw && dv.contains(&a.sign) && dw.contains(&b.sign) {
                return Ok(Some(cert(OptionCase::Two, b.sign, a.sign)));
            }
        }
        Ok(None)
    }

    /// The unique non-periodic partner, if the adjacency and sign system is solvable.
    fn partner(&self, w: &BiCode) -> Result<Option<(BiCode, PartnerCertificate)>> {
        let p = self.pivot(w)?;
        let c = w.symbol_at(p);
        let next = w.symbol_at(self.next(p));
        let deltas = self.deltas(&self.tail_code(w, p), next);
        let shared = self.shared_half(w, p);

        let mut found: Vec<(BiCode, PartnerCertificate)> = Vec::new();
        for j in 1..self.count(c) {
            let (a, b) = self.pair(c, j);
            let mut candidates = Vec::new();
            if a.idx == next && deltas.contains(&a.sign) {
                candidates.push(b);
            }
            if b.idx == next && deltas.contains(&b.sign) {
                candidates.push(a);
            }
            for lbl in candidates {
                let v = self.assemble(&shared, self.code_of(lbl), p);
                if &v == w || v.is_periodic() || found.iter().any(|(u, _)| *u == v) {
                    continue;
                }
                if !self.sub.is_admissible(&v) || !self.in_stratum(&v) {
                    continue;
                }
                if let Some(cert) = self.certify(w, &v)? {
                    found.push((v, cert));
                }
            }
        }
        match found.len() {
            0 => Ok(None),
            1 => Ok(found.pop()),
            _ => Err(Error::AmbiguousPartner),
        }
    }

    /// Read the boundary half of a periodic code (`α₊` or `α₋`).
    fn periodic_half(&self, a: &BiCode) -> OneSidedCode {
        match self.rel {
            Relation::S => a.positive_part(),
            Relation::U => a.negative_part(),
        }
    }

    /// The periodic code whose boundary half is the purely periodic `code`.
    fn periodic_from_half(&self, code: &OneSidedCode) -> BiCode {
        let word = match self.rel {
            Relation::S => code.period().to_vec(),
            Relation::U => {
                let mut w: Vec<Symbol> = code.period().iter().rev().copied().collect();
                w.rotate_right(1);
                w
            }
        };
        BiCode::periodic(word).expect("nonempty period")
    }

    /// Periodic codes related to the periodic code `a`, other than `a` itself.
    ///
    /// A witness pair `w ~s v` pivots at some `(c, j)` and then follows the orbits of the two
    /// labels of `pair(c, j)` in lockstep; `a` and `b` are related iff their boundary halves
    /// appear together along such a lockstep orbit. The witnesses' shared half is free.
    fn periodic_relatives(&self, a: &BiCode) -> BTreeSet<BiCode> {
        let target = self.periodic_half(a);
        let codes = self.sub.codes();
        let mut out = BTreeSet::new();
        for c in 1..=self.t().n() {
            for j in 1..self.count(c) {
                let (x0, y0) = self.pair(c, j);
                // the witnesses must really pivot at c: c followed by either tail is outside
                let outside = |l: BoundaryLabel| {
                    let code = self.code_of(l);
                    let mut tr = vec![c];
                    tr.extend_from_slice(code.transient());
                    let prefixed = OneSidedCode::new(tr, code.period().to_vec(), code.direction())
                        .expect("valid code");
                    !codes.contains(&prefixed)
                };
                if !outside(x0) || !outside(y0) {
                    continue;
                }
                let mut seen = HashSet::new();
                let (mut x, mut y) = (x0, y0);
                while seen.insert((x, y)) {
                    let (cx, cy) = (self.code_of(x), self.code_of(y));
                    if *cx == target && cy.is_purely_periodic() {
                        out.insert(self.periodic_from_half(cy));
                    }
                    if *cy == target && cx.is_purely_periodic() {
                        out.insert(self.periodic_from_half(cx));
                    }
                    x = self.step(x);
                    y = self.step(y);
                }
            }
        }
        out.remove(a);
        out
    }

    fn related(&self, w: &BiCode, v: &BiCode) -> Result<bool> {
        self.require(w)?;
        self.require(v)?;
        if w == v {
            return Ok(true);
        }
        match (w.is_periodic(), v.is_periodic()) {
            (true, true) => Ok(self.periodic_relatives(w).contains(v)),
            (false, false) => Ok(self.certify(w, v)?.is_some()),
            _ => Ok(false),
        }
    }

    fn neighbours(&self, w: &BiCode) -> Result<Vec<(BiCode, Option<PartnerCertificate>)>> {
        if !self.in_stratum(w) {
            return Ok(Vec::new());
        }
        if w.is_periodic() {
            Ok(self
                .periodic_relatives(w)
                .into_iter()
                .map(|v| (v, None))
                .collect())
        } else {
            Ok(self
                .partner(w)?
                .map(|(v, c)| (v, Some(c)))
                .into_iter()
                .collect())
        }
    }
}

impl Subshift {
    fn side(&self, rel: Relation) -> Side<'_> {
        Side { sub: self, rel }
    }

    fn require_mixing(&self) -> Result<()> {
        if self.is_mixing() {
            Ok(())
        } else {
            Err(Error::NotMixing)
        }
    }

    /// The pivot `k`: `σ^k(w) ∉ 𝒮(T)` but `σ^{k+1}(w) ∈ 𝒮(T)`.
    pub fn pivot_k(&self, w: &BiCode) -> Result<i64> {
        self.side(Relation::S).pivot(w)
    }

    /// The pivot `z`: `σ^z(w) ∉ 𝒰(T)` but `σ^{z-1}(w) ∈ 𝒰(T)`.
    pub fn pivot_z(&self, w: &BiCode) -> Result<i64> {
        self.side(Relation::U).pivot(w)
    }

    pub fn partner(
        &self,
        rel: Relation,
        w: &BiCode,
    ) -> Result<Option<(BiCode, PartnerCertificate)>> {
        self.require_mixing()?;
        self.side(rel).partner(w)
    }

    pub fn related(&self, rel: Relation, w: &BiCode, v: &BiCode) -> Result<bool> {
        self.require_mixing()?;
        self.side(rel).related(w, v)
    }

    /// Codes other than `w` directly related to it: the partner of a non-periodic code, or the
    /// periodic relatives of a periodic one. Empty outside the stratum.
    pub fn relatives(&self, rel: Relation, w: &BiCode) -> Result<BTreeSet<BiCode>> {
        self.require_mixing()?;
        self.require_admissible(w)?;
        Ok(self
            .side(rel)
            .neighbours(w)?
            .into_iter()
            .map(|(v, _)| v)
            .collect())
    }

    /// Breadth-first closure of `{w}` under `~s` and `~u`, stopping at `cap` members.
    pub fn class_of(&self, w: &BiCode, cap: usize) -> Result<ClassReport> {
        self.require_mixing()?;
        self.require_admissible(w)?;
        let mut members = BTreeSet::from([w.clone()]);
        let mut chain = Vec::new();
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            for rel in [Relation::S, Relation::U] {
                for (y, certificate) in self.side(rel).neighbours(&x)? {
                    if members.contains(&y) {
                        continue;
                    }
                    if members.len() >= cap {
                        return Ok(ClassReport {
                            members,
                            chain,
                            truncated: true,
                        });
                    }
                    members.insert(y.clone());
                    chain.push(ChainEdge {
                        from: x.clone(),
                        relation: rel,
                        to: y.clone(),
                        certificate,
                    });
                    queue.push_back(y);
                }
            }
        }
        Ok(ClassReport {
            members,
            chain,
            truncated: false,
        })
    }

    pub fn sim_t(&self, w: &BiCode, v: &BiCode, cap: usize) -> Result<bool> {
        self.require_admissible(v)?;
        let class = self.class_of(w, cap)?;
        if class.members.contains(v) {
            Ok(true)
        } else if class.truncated {
            Err(Error::Indeterminate { cap })
        } else {
            Ok(false)
        }
    }
}

pub fn pivot_k(t: &GeometricType, w: &BiCode) -> Result<i64> {
    Subshift::new(t)?.pivot_k(w)
}

pub fn pivot_z(t: &GeometricType, w: &BiCode) -> Result<i64> {
    Subshift::new(t)?.pivot_z(w)
}

pub fn s_partner(t: &GeometricType, w: &BiCode) -> Result<Option<(BiCode, PartnerCertificate)>> {
    Subshift::new(t)?.partner(Relation::S, w)
}

pub fn u_partner(t: &GeometricType, w: &BiCode) -> Result<Option<(BiCode, PartnerCertificate)>> {
    Subshift::new(t)?.partner(Relation::U, w)
}

pub fn sim_s(t: &GeometricType, w: &BiCode, v: &BiCode) -> Result<bool> {
    Subshift::new(t)?.related(Relation::S, w, v)
}

pub fn sim_u(t: &GeometricType, w: &BiCode, v: &BiCode) -> Result<bool> {
    Subshift::new(t)?.related(Relation::U, w, v)
}

pub fn class_of(t: &GeometricType, w: &BiCode, cap: usize) -> Result<ClassReport> {
    Subshift::new(t)?.class_of(w, cap)
}

pub fn sim_t(t: &GeometricType, w: &BiCode, v: &BiCode, cap: usize) -> Result<bool> {
    Subshift::new(t)?.sim_t(w, v, cap)
}

/// Compares two types through their binary refinements `B(a)` and `B(b)`.
///
/// Both inputs are refined, binary or not: realizations of `a` and `b` carry refined
/// partitions of types `B(a)` and `B(b)`, so equality of these certifies conjugacy.
pub fn compare_types(a: &GeometricType, b: &GeometricType) -> CompareReport {
    let refined_a = binary_refinement(a);
    let refined_b = binary_refinement(b);
    let refined_equal = refined_a == refined_b;
    CompareReport {
        structurally_equal: a == b,
        binary_a: incidence_matrix(a).is_binary(),
        binary_b: incidence_matrix(b).is_binary(),
        refined_a,
        refined_b,
        refined_equal,
        verdict: if refined_equal {
            Verdict::SameInvariant
        } else {
            Verdict::InvariantDistinct
        },
    }
}
