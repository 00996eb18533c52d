//! Boundary labels, the generating functions `Γ` (stable sides, forward) and `Υ` (unstable
//! sides, backward), their orbits and the boundary codes they produce.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::code::{Direction, OneSidedCode, Symbol};
use crate::error::{Error, Result};
use crate::geometric_type::{GeometricType, HLabel, Sign, VLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Flavor {
    /// Stable (horizontal) sides: `-1` lower, `+1` upper.
    S,
    /// Unstable (vertical) sides: `-1` left, `+1` right.
    U,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::S => "s",
            Flavor::U => "u",
        })
    }
}

/// A side of a rectangle: `(idx, sign)` tagged with its flavor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryLabel {
    pub idx: usize,
    pub sign: Sign,
    pub flavor: Flavor,
}

impl BoundaryLabel {
    pub fn s(idx: usize, sign: Sign) -> Self {
        BoundaryLabel {
            idx,
            sign,
            flavor: Flavor::S,
        }
    }

    pub fn u(idx: usize, sign: Sign) -> Self {
        BoundaryLabel {
            idx,
            sign,
            flavor: Flavor::U,
        }
    }

    /// The `2n` labels of one flavor, ordered by index then sign (`-` before `+`).
    pub fn all(n: usize, flavor: Flavor) -> impl Iterator<Item = BoundaryLabel> {
        (1..=n).flat_map(move |idx| {
            [Sign::Minus, Sign::Plus]
                .into_iter()
                .map(move |sign| BoundaryLabel { idx, sign, flavor })
        })
    }
}

impl Serialize for BoundaryLabel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl fmt::Display for BoundaryLabel {
    /// Same syntax as the command line: `s:+3`, `u:-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}{}", self.flavor, self.sign, self.idx)
    }
}

fn expect_flavor(t: &GeometricType, lbl: BoundaryLabel, flavor: Flavor) -> Result<()> {
    if lbl.flavor != flavor {
        return Err(Error::Flavor {
            expected: flavor,
            got: lbl.flavor,
        });
    }
    if lbl.idx < 1 || lbl.idx > t.n() {
        return Err(Error::InvalidLabel(lbl.to_string()));
    }
    Ok(())
}

/// Horizontal sub-rectangle containing a stable side: the lowest for `-1`, the highest for `+1`.
pub fn theta(t: &GeometricType, lbl: BoundaryLabel) -> Result<HLabel> {
    expect_flavor(t, lbl, Flavor::S)?;
    Ok(match lbl.sign {
        Sign::Minus => HLabel::new(lbl.idx, 1),
        Sign::Plus => HLabel::new(lbl.idx, t.h(lbl.idx)),
    })
}

/// Vertical sub-rectangle containing an unstable side: leftmost for `-1`, rightmost for `+1`.
pub fn eta(t: &GeometricType, lbl: BoundaryLabel) -> Result<VLabel> {
    expect_flavor(t, lbl, Flavor::U)?;
    Ok(match lbl.sign {
        Sign::Minus => VLabel::new(lbl.idx, 1),
        Sign::Plus => VLabel::new(lbl.idx, t.v(lbl.idx)),
    })
}

/// The stable side that the image of `lbl` lies on.
pub fn gamma(t: &GeometricType, lbl: BoundaryLabel) -> Result<BoundaryLabel> {
    let h = theta(t, lbl)?;
    Ok(BoundaryLabel::s(t.rho(h).k, lbl.sign * t.eps(h)))
}

/// The unstable side that the preimage of `lbl` lies on.
pub fn upsilon(t: &GeometricType, lbl: BoundaryLabel) -> Result<BoundaryLabel> {
    let v = eta(t, lbl)?;
    let h = t.rho_inv(v);
    Ok(BoundaryLabel::u(h.i, lbl.sign * t.eps(h)))
}

fn step(t: &GeometricType, lbl: BoundaryLabel) -> Result<BoundaryLabel> {
    match lbl.flavor {
        Flavor::S => gamma(t, lbl),
        Flavor::U => upsilon(t, lbl),
    }
}

/// Pre-periodic orbit of a label: `transient` leads into the closed `cycle`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitDecomposition {
    pub transient: Vec<BoundaryLabel>,
    pub cycle: Vec<BoundaryLabel>,
}

impl OrbitDecomposition {
    pub fn len(&self) -> usize {
        self.transient.len() + self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// The one-sided code of first components along the orbit.
    pub fn code(&self, direction: Direction) -> OneSidedCode {
        let idx = |v: &[BoundaryLabel]| v.iter().map(|l| l.idx).collect::<Vec<Symbol>>();
        OneSidedCode::new(idx(&self.transient), idx(&self.cycle), direction)
            .expect("cycle is nonempty")
    }
}

/// Iterates `Γ` (s-labels) or `Υ` (u-labels) until the first repeated label.
pub fn orbit(t: &GeometricType, lbl: BoundaryLabel) -> Result<OrbitDecomposition> {
    if lbl.idx < 1 || lbl.idx > t.n() {
        return Err(Error::InvalidLabel(lbl.to_string()));
    }
    let mut seen: HashMap<BoundaryLabel, usize> = HashMap::new();
    let mut path = Vec::new();
    let mut cur = lbl;
    while !seen.contains_key(&cur) {
        seen.insert(cur, path.len());
        path.push(cur);
        cur = step(t, cur)?;
    }
    let cycle = path.split_off(seen[&cur]);
    Ok(OrbitDecomposition {
        transient: path,
        cycle,
    })
}

/// `I⁺(i, δ)`: rectangles visited by the forward orbit of a stable side.
pub fn s_boundary_code(t: &GeometricType, lbl: BoundaryLabel) -> Result<OneSidedCode> {
    expect_flavor(t, lbl, Flavor::S)?;
    Ok(orbit(t, lbl)?.code(Direction::Positive))
}

/// `J⁻(k, δ)`: rectangles visited by the backward orbit of an unstable side, read leftward.
pub fn u_boundary_code(t: &GeometricType, lbl: BoundaryLabel) -> Result<OneSidedCode> {
    expect_flavor(t, lbl, Flavor::U)?;
    Ok(orbit(t, lbl)?.code(Direction::Negative))
}

/// All `2n` positive s-codes and `2n` negative u-codes of a type, with reverse lookup.
#[derive(Debug, Clone)]
pub struct BoundaryCodes {
    pub s: Vec<(BoundaryLabel, OneSidedCode)>,
    pub u: Vec<(BoundaryLabel, OneSidedCode)>,
    s_index: HashMap<OneSidedCode, Vec<BoundaryLabel>>,
    u_index: HashMap<OneSidedCode, Vec<BoundaryLabel>>,
}

impl BoundaryCodes {
    pub fn new(t: &GeometricType) -> Self {
        let collect = |flavor: Flavor| -> Vec<(BoundaryLabel, OneSidedCode)> {
            BoundaryLabel::all(t.n(), flavor)
                .map(|l| {
                    let code = match flavor {
                        Flavor::S => s_boundary_code(t, l),
                        Flavor::U => u_boundary_code(t, l),
                    };
                    (l, code.expect("label in range"))
                })
                .collect()
        };
        let s = collect(Flavor::S);
        let u = collect(Flavor::U);
        let index = |codes: &[(BoundaryLabel, OneSidedCode)]| {
            let mut m: HashMap<OneSidedCode, Vec<BoundaryLabel>> = HashMap::new();
            for (l, c) in codes {
                m.entry(c.clone()).or_default().push(*l);
            }
            m
        };
        let s_index = index(&s);
        let u_index = index(&u);
        BoundaryCodes {
            s,
            u,
            s_index,
            u_index,
        }
    }

    /// Labels whose code equals `code` (more than one only for non-injective types).
    pub fn labels_of(&self, code: &OneSidedCode) -> &[BoundaryLabel] {
        let index = match code.direction() {
            Direction::Positive => &self.s_index,
            Direction::Negative => &self.u_index,
        };
        index.get(code).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn contains(&self, code: &OneSidedCode) -> bool {
        !self.labels_of(code).is_empty()
    }

    pub fn code_of(&self, lbl: BoundaryLabel) -> &OneSidedCode {
        let table = match lbl.flavor {
            Flavor::S => &self.s,
            Flavor::U => &self.u,
        };
        let pos = 2 * (lbl.idx - 1) + usize::from(lbl.sign == Sign::Plus);
        &table[pos].1
    }

    pub fn injective(&self) -> bool {
        self.s_index.len() == self.s.len() && self.u_index.len() == self.u.len()
    }
}

/// True iff the `2n` s-codes are pairwise distinct and so are the `2n` u-codes.
pub fn check_injectivity(t: &GeometricType) -> bool {
    BoundaryCodes::new(t).injective()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refinement::binary_refinement;

    fn t0() -> GeometricType {
        GeometricType::from_tables(vec![(2, 2)], vec![(1, 1), (1, 2)], vec![1, 1]).unwrap()
    }

    fn bt0() -> GeometricType {
        binary_refinement(&t0())
    }

    fn pos(t: &[Symbol], p: &[Symbol]) -> OneSidedCode {
        OneSidedCode::new(t.to_vec(), p.to_vec(), Direction::Positive).unwrap()
    }

    fn neg(t: &[Symbol], p: &[Symbol]) -> OneSidedCode {
        OneSidedCode::new(t.to_vec(), p.to_vec(), Direction::Negative).unwrap()
    }

    use Sign::{Minus, Plus};

    #[test]
    fn theta_and_eta() {
        let t = t0();
        assert_eq!(
            theta(&t, BoundaryLabel::s(1, Minus)).unwrap(),
            HLabel::new(1, 1)
        );
        assert_eq!(
            theta(&t, BoundaryLabel::s(1, Plus)).unwrap(),
            HLabel::new(1, 2)
        );
        assert_eq!(
            eta(&t, BoundaryLabel::u(1, Minus)).unwrap(),
            VLabel::new(1, 1)
        );
        assert_eq!(
            eta(&t, BoundaryLabel::u(1, Plus)).unwrap(),
            VLabel::new(1, 2)
        );
        let id = GeometricType::from_tables(vec![(1, 1)], vec![(1, 1)], vec![1]).unwrap();
        assert_eq!(
            theta(&id, BoundaryLabel::s(1, Plus)).unwrap(),
            HLabel::new(1, 1)
        );
        assert_eq!(
            theta(&id, BoundaryLabel::s(1, Minus)).unwrap(),
            HLabel::new(1, 1)
        );
        assert_eq!(
            eta(&id, BoundaryLabel::u(1, Plus)).unwrap(),
            VLabel::new(1, 1)
        );
        assert_eq!(
            theta(&t, BoundaryLabel::u(1, Plus)),
            Err(Error::Flavor {
                expected: Flavor::S,
                got: Flavor::U
            })
        );
        assert!(eta(&t, BoundaryLabel::s(1, Plus)).is_err());
        assert!(matches!(
            theta(&t, BoundaryLabel::s(2, Plus)),
            Err(Error::InvalidLabel(_))
        ));
    }

    #[test]
    fn gamma_on_refined_t0() {
        let b = bt0();
        assert_eq!(
            gamma(&b, BoundaryLabel::s(1, Plus)).unwrap(),
            BoundaryLabel::s(2, Plus)
        );
        assert_eq!(
            gamma(&b, BoundaryLabel::s(2, Plus)).unwrap(),
            BoundaryLabel::s(2, Plus)
        );
        assert_eq!(
            gamma(&b, BoundaryLabel::s(1, Minus)).unwrap(),
            BoundaryLabel::s(1, Minus)
        );
        assert!(gamma(&b, BoundaryLabel::u(1, Minus)).is_err());
    }

    #[test]
    fn upsilon_on_refined_t0() {
        let b = bt0();
        assert_eq!(
            upsilon(&b, BoundaryLabel::u(1, Minus)).unwrap(),
            BoundaryLabel::u(1, Minus)
        );
        assert_eq!(
            upsilon(&b, BoundaryLabel::u(2, Plus)).unwrap(),
            BoundaryLabel::u(2, Plus)
        );
        assert_eq!(
            upsilon(&b, BoundaryLabel::u(1, Plus)).unwrap(),
            BoundaryLabel::u(2, Plus)
        );
        assert!(upsilon(&b, BoundaryLabel::s(1, Plus)).is_err());
    }

    #[test]
    fn orbits_on_refined_t0() {
        let b = bt0();
        let o = orbit(&b, BoundaryLabel::s(1, Plus)).unwrap();
        assert_eq!(o.transient, vec![BoundaryLabel::s(1, Plus)]);
        assert_eq!(o.cycle, vec![BoundaryLabel::s(2, Plus)]);
        let o = orbit(&b, BoundaryLabel::s(1, Minus)).unwrap();
        assert!(o.transient.is_empty());
        assert_eq!(o.cycle, vec![BoundaryLabel::s(1, Minus)]);
        assert!(orbit(&b, BoundaryLabel::s(3, Minus)).is_err());
    }

    #[test]
    fn orientation_reversal_flips_the_side() {
        // T1: the upper strip is mapped upside down onto the left strip
        let t1 =
            GeometricType::from_tables(vec![(2, 2)], vec![(1, 2), (1, 1)], vec![1, -1]).unwrap();
        assert_eq!(
            gamma(&t1, BoundaryLabel::s(1, Plus)).unwrap(),
            BoundaryLabel::s(1, Minus)
        );
        assert_eq!(
            gamma(&t1, BoundaryLabel::s(1, Minus)).unwrap(),
            BoundaryLabel::s(1, Minus)
        );
        let o = orbit(&t1, BoundaryLabel::s(1, Plus)).unwrap();
        assert_eq!(o.len(), 2);
    }

    #[test]
    fn boundary_codes_on_refined_t0() {
        let b = bt0();
        let s = |i, d| s_boundary_code(&b, BoundaryLabel::s(i, d)).unwrap();
        let u = |i, d| u_boundary_code(&b, BoundaryLabel::u(i, d)).unwrap();
        assert_eq!(s(1, Plus), pos(&[1], &[2]));
        assert_eq!(s(1, Minus), pos(&[], &[1]));
        assert_eq!(s(2, Plus), pos(&[], &[2]));
        assert_eq!(s(2, Minus), pos(&[2], &[1]));
        assert_eq!(u(1, Minus), neg(&[], &[1]));
        assert_eq!(u(2, Plus), neg(&[], &[2]));
        assert_eq!(u(1, Plus), neg(&[1], &[2]));
        assert!(s_boundary_code(&b, BoundaryLabel::u(1, Plus)).is_err());
    }

    #[test]
    fn injectivity_examples() {
        assert!(check_injectivity(&bt0()));
        assert!(!check_injectivity(&t0()));
        let id = GeometricType::from_tables(vec![(1, 1)], vec![(1, 1)], vec![1]).unwrap();
        assert!(!check_injectivity(&id));
        let codes = BoundaryCodes::new(&t0());
        assert_eq!(codes.labels_of(&pos(&[], &[1])).len(), 2);
    }

    #[test]
    fn code_lookup_by_label() {
        let b = bt0();
        let codes = BoundaryCodes::new(&b);
        for (l, c) in codes.s.iter().chain(&codes.u) {
            assert_eq!(codes.code_of(*l), c);
            assert!(codes.labels_of(c).contains(l));
        }
    }
}
