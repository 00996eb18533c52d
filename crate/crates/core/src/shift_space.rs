//! The subshift of finite type `Σ_A` of a binary geometric type, restricted to eventually
//! periodic codes, and its stratification into s-leaf, u-leaf and totally interior codes.

use serde::Serialize;

use crate::boundary::BoundaryCodes;
use crate::code::{BiCode, Symbol};
use crate::error::{Error, Result};
use crate::geometric_type::{incidence_matrix, GeometricType, IncidenceMatrix};

/// Default cap on `p · n^p` for [`enumerate_periodic`].
pub const DEFAULT_PERIODIC_BUDGET: u128 = 1 << 22;

/// Membership of a code in `Σ_S` (s-boundary leaf codes) and `Σ_U` (u-boundary leaf codes).
/// Both false means totally interior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub in_s: bool,
    pub in_u: bool,
}

impl ClassificationFlags {
    pub fn is_interior(&self) -> bool {
        !self.in_s && !self.in_u
    }
}

/// A binary geometric type together with its incidence matrix and boundary-code tables.
#[derive(Debug, Clone)]
pub struct Subshift {
    t: GeometricType,
    a: IncidenceMatrix,
    codes: BoundaryCodes,
    mixing: bool,
}

impl Subshift {
    /// Fails with [`Error::NotBinary`] unless `A(T)` is binary.
    pub fn new(t: &GeometricType) -> Result<Self> {
        let a = incidence_matrix(t);
        if !a.is_binary() {
            return Err(Error::NotBinary);
        }
        let mixing = a.is_mixing();
        Ok(Subshift {
            t: t.clone(),
            a,
            codes: BoundaryCodes::new(t),
            mixing,
        })
    }

    pub fn geometric_type(&self) -> &GeometricType {
        &self.t
    }

    pub fn matrix(&self) -> &IncidenceMatrix {
        &self.a
    }

    pub fn codes(&self) -> &BoundaryCodes {
        &self.codes
    }

    pub fn is_mixing(&self) -> bool {
        self.mixing
    }

    pub fn is_admissible(&self, w: &BiCode) -> bool {
        is_admissible_in(&self.a, w)
    }

    pub(crate) fn require_admissible(&self, w: &BiCode) -> Result<()> {
        if self.is_admissible(w) {
            Ok(())
        } else {
            Err(Error::NotAdmissible(w.to_string()))
        }
    }

    /// `σ^z(w) ∈ 𝒮(T)`: the positive part from position `z` is an s-boundary code.
    pub fn s_boundary_at(&self, w: &BiCode, z: i64) -> bool {
        self.codes.contains(&w.positive_part_from(z))
    }

    /// `σ^z(w) ∈ 𝒰(T)`: the negative part from position `z` is a u-boundary code.
    pub fn u_boundary_at(&self, w: &BiCode, z: i64) -> bool {
        self.codes.contains(&w.negative_part_from(z))
    }

    /// Membership in the s- and u-leaf strata.
    ///
    /// `𝒮(T)` membership of `σ^z(w)` is upward closed in `z` (the tail of a boundary code is a
    /// boundary code), and periodic in `z` once inside the right periodic region, so it is
    /// enough to test at the start of that region. Dually for `𝒰(T)` at the end of the left
    /// periodic region.
    pub fn classify(&self, w: &BiCode) -> Result<ClassificationFlags> {
        self.require_admissible(w)?;
        Ok(ClassificationFlags {
            in_s: self.s_boundary_at(w, w.right_start().max(0)),
            in_u: self.u_boundary_at(w, w.left_end().min(0)),
        })
    }

    /// All purely periodic admissible codes with primitive period at most `p`, sorted.
    /// Rotations of one cycle are distinct codes.
    pub fn enumerate_periodic(&self, p: usize, budget: u128) -> Result<Vec<BiCode>> {
        let n = self.a.n() as u128;
        let needed = (p as u128).saturating_mul(n.saturating_pow(p as u32));
        if needed > budget {
            return Err(Error::Budget { needed, budget });
        }
        let mut out = Vec::new();
        let mut word: Vec<Symbol> = Vec::with_capacity(p);
        for q in 1..=p {
            for s in 1..=self.a.n() {
                word.clear();
                word.push(s);
                self.extend_cycles(&mut word, q, &mut out);
            }
        }
        out.sort();
        Ok(out)
    }

    fn extend_cycles(&self, word: &mut Vec<Symbol>, q: usize, out: &mut Vec<BiCode>) {
        let last = *word.last().unwrap();
        if word.len() == q {
            if self.a.allows(last, word[0]) && is_primitive(word) {
                out.push(BiCode::periodic(word.clone()).expect("nonempty word"));
            }
            return;
        }
        for next in 1..=self.a.n() {
            if self.a.allows(last, next) {
                word.push(next);
                self.extend_cycles(word, q, out);
                word.pop();
            }
        }
    }
}

fn is_primitive(word: &[Symbol]) -> bool {
    let n = word.len();
    (1..n).all(|p| !n.is_multiple_of(p) || (p..n).any(|i| word[i] != word[i - p]))
}

/// Every adjacent pair of `w` is an allowed transition of `a` (symbols out of range are not).
pub fn is_admissible_in(a: &IncidenceMatrix, w: &BiCode) -> bool {
    w.transitions().into_iter().all(|(x, y)| a.allows(x, y))
}

/// Admissibility in `Σ_{A(T)}`; `T` must be symbolically presentable (binary).
pub fn is_admissible(t: &GeometricType, w: &BiCode) -> Result<bool> {
    let a = incidence_matrix(t);
    if !a.is_binary() {
        return Err(Error::NotBinary);
    }
    Ok(is_admissible_in(&a, w))
}

/// All admissible words of length `m`, in lexicographic order, refusing more than `budget`.
pub fn list_words(a: &IncidenceMatrix, m: usize, budget: u128) -> Result<Vec<Vec<Symbol>>> {
    let count = a.word_count(m)?;
    let needed = u128::try_from(&count).unwrap_or(u128::MAX);
    if needed > budget {
        return Err(Error::Budget { needed, budget });
    }
    fn extend(a: &IncidenceMatrix, m: usize, w: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
        if w.len() == m {
            out.push(w.clone());
            return;
        }
        for s in 1..=a.n() {
            if w.last().is_none_or(|&l| a.allows(l, s)) {
                w.push(s);
                extend(a, m, w, out);
                w.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(a, m, &mut Vec::with_capacity(m), &mut out);
    Ok(out)
}

pub fn classify(t: &GeometricType, w: &BiCode) -> Result<ClassificationFlags> {
    Subshift::new(t)?.classify(w)
}

pub fn enumerate_periodic(t: &GeometricType, p: usize, budget: u128) -> Result<Vec<BiCode>> {
    Subshift::new(t)?.enumerate_periodic(p, budget)
}
