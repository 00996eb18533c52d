//! Eventually periodic symbol sequences.
//!
//! [`OneSidedCode`] is `transient · period^∞` read away from position 0, either rightward
//! (positive codes) or leftward (negative codes). [`BiCode`] is a bi-infinite sequence
//! `…L L core R R…` with a position 0. Both are kept in a canonical form so that equality of
//! represented sequences is structural equality.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A rectangle index, 1-based.
pub type Symbol = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    /// Indices `0, 1, 2, …`.
    Positive,
    /// Indices `0, -1, -2, …`.
    Negative,
}

fn primitive_root(word: &[Symbol]) -> Vec<Symbol> {
    let n = word.len();
    for p in 1..=n {
        if n.is_multiple_of(p) && (p..n).all(|i| word[i] == word[i - p]) {
            return word[..p].to_vec();
        }
    }
    word.to_vec()
}

fn check_word(word: &[Symbol], what: &str) -> Result<()> {
    if word.contains(&0) {
        return Err(Error::Argument(format!(
            "{what} contains symbol 0; symbols are 1-based"
        )));
    }
    Ok(())
}

/// `transient · period^∞` with a primitive period and the shortest transient.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneSidedCode {
    transient: Vec<Symbol>,
    period: Vec<Symbol>,
    direction: Direction,
}

impl OneSidedCode {
    /// Symbols are listed in reading order, i.e. away from position 0.
    pub fn new(transient: Vec<Symbol>, period: Vec<Symbol>, direction: Direction) -> Result<Self> {
        if period.is_empty() {
            return Err(Error::Argument(
                "period of a one-sided code must be nonempty".into(),
            ));
        }
        check_word(&transient, "transient")?;
        check_word(&period, "period")?;
        Ok(Self::canonical(transient, period, direction))
    }

    fn canonical(mut transient: Vec<Symbol>, period: Vec<Symbol>, direction: Direction) -> Self {
        let mut period = primitive_root(&period);
        while let (Some(&t), Some(&p)) = (transient.last(), period.last()) {
            if t != p {
                break;
            }
            transient.pop();
            period.rotate_right(1);
        }
        OneSidedCode {
            transient,
            period,
            direction,
        }
    }

    pub fn transient(&self) -> &[Symbol] {
        &self.transient
    }

    pub fn period(&self) -> &[Symbol] {
        &self.period
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn is_purely_periodic(&self) -> bool {
        self.transient.is_empty()
    }

    /// The `m`-th symbol in reading order.
    pub fn symbol(&self, m: usize) -> Symbol {
        if m < self.transient.len() {
            self.transient[m]
        } else {
            self.period[(m - self.transient.len()) % self.period.len()]
        }
    }

    /// Drops the first symbol (the shift towards the reading direction).
    pub fn tail(&self) -> OneSidedCode {
        if self.transient.is_empty() {
            let mut period = self.period.clone();
            period.rotate_left(1);
            OneSidedCode {
                transient: Vec::new(),
                period,
                direction: self.direction,
            }
        } else {
            Self::canonical(
                self.transient[1..].to_vec(),
                self.period.clone(),
                self.direction,
            )
        }
    }

    pub fn max_symbol(&self) -> Symbol {
        self.transient
            .iter()
            .chain(&self.period)
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// Bi-infinite eventually periodic code `…L L core R R…`.
///
/// Canonical form: primitive periods, the right periodic region starts as early as possible,
/// the left periodic region ends as late as possible before it, and purely periodic codes
/// are stored with an empty core, `left == right` and `right[0]` at position 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiCode {
    // last symbol sits at position offset - 1
    left: Vec<Symbol>,
    core: Vec<Symbol>,
    // first symbol sits at position offset + core.len()
    right: Vec<Symbol>,
    // position of the first core symbol
    offset: i64,
}

impl BiCode {
    /// `anchor` is the index into `core` of the symbol at position 0; it may point outside
    /// the core, into either periodic region.
    pub fn new(
        left: Vec<Symbol>,
        core: Vec<Symbol>,
        right: Vec<Symbol>,
        anchor: i64,
    ) -> Result<Self> {
        if left.is_empty() || right.is_empty() {
            return Err(Error::Argument(
                "periodic parts of a bi-infinite code must be nonempty".into(),
            ));
        }
        check_word(&left, "left period")?;
        check_word(&core, "core")?;
        check_word(&right, "right period")?;
        Ok(Self::canonical(left, core, right, -anchor))
    }

    /// The purely periodic code with `word[0]` at position 0.
    pub fn periodic(word: Vec<Symbol>) -> Result<Self> {
        BiCode::new(word.clone(), Vec::new(), word, 0)
    }

    /// Glues a negative code (its position 0 placed at `cut`) to a positive code (its
    /// position 0 placed at `cut + 1`).
    pub fn from_halves(neg: &OneSidedCode, pos: &OneSidedCode, cut: i64) -> Result<Self> {
        if neg.direction != Direction::Negative || pos.direction != Direction::Positive {
            return Err(Error::Argument(
                "from_halves needs a negative and a positive code".into(),
            ));
        }
        let mut core: Vec<Symbol> = neg.transient.iter().rev().copied().collect();
        let offset = cut - neg.transient.len() as i64 + 1;
        core.extend_from_slice(&pos.transient);
        let left: Vec<Symbol> = neg.period.iter().rev().copied().collect();
        Ok(Self::canonical(left, core, pos.period.clone(), offset))
    }

    fn canonical(
        left: Vec<Symbol>,
        mut core: Vec<Symbol>,
        right: Vec<Symbol>,
        mut offset: i64,
    ) -> Self {
        let mut left = primitive_root(&left);
        let mut right = primitive_root(&right);

        // grow the right periodic region leftwards into the core
        while let Some(&c) = core.last() {
            if c != *right.last().unwrap() {
                break;
            }
            core.pop();
            right.rotate_right(1);
        }
        // grow the left periodic region rightwards into what remains
        while let Some(&c) = core.first() {
            if c != left[0] {
                break;
            }
            core.remove(0);
            left.rotate_left(1);
            offset += 1;
        }
        if core.is_empty() {
            // the split point between two touching periodic regions is pushed left as far as
            // the right period keeps matching; within |L|+|R| steps it either stops or the
            // whole sequence turns out to be periodic
            let limit = left.len() + right.len() + 1;
            for _ in 0..=limit {
                if left == right {
                    let p = right.len() as i64;
                    let shift = (-offset).rem_euclid(p) as usize;
                    right.rotate_left(shift);
                    return BiCode {
                        left: right.clone(),
                        core,
                        right,
                        offset: 0,
                    };
                }
                if left.last() != right.last() {
                    break;
                }
                left.rotate_right(1);
                right.rotate_right(1);
                offset -= 1;
            }
        }
        BiCode {
            left,
            core,
            right,
            offset,
        }
    }

    pub fn left_period(&self) -> &[Symbol] {
        &self.left
    }

    pub fn core(&self) -> &[Symbol] {
        &self.core
    }

    pub fn right_period(&self) -> &[Symbol] {
        &self.right
    }

    /// Index into the core of position 0 (see [`BiCode::new`]).
    pub fn anchor(&self) -> i64 {
        -self.offset
    }

    /// First position of the right periodic region.
    pub fn right_start(&self) -> i64 {
        self.offset + self.core.len() as i64
    }

    /// Last position of the left periodic region.
    pub fn left_end(&self) -> i64 {
        self.offset - 1
    }

    pub fn is_periodic(&self) -> bool {
        self.core.is_empty() && self.left == self.right
    }

    pub fn symbol_at(&self, z: i64) -> Symbol {
        let start = self.right_start();
        if z >= start {
            self.right[(z - start).rem_euclid(self.right.len() as i64) as usize]
        } else if z >= self.offset {
            self.core[(z - self.offset) as usize]
        } else {
            let back = (self.offset - 1 - z).rem_euclid(self.left.len() as i64) as usize;
            self.left[self.left.len() - 1 - back]
        }
    }

    /// `shift(w, s)` is the code `z ↦ w_{z+s}`.
    pub fn shift(&self, steps: i64) -> BiCode {
        Self::canonical(
            self.left.clone(),
            self.core.clone(),
            self.right.clone(),
            self.offset - steps,
        )
    }

    /// `(w_z, w_{z+1}, …)` as a positive code.
    pub fn positive_part_from(&self, z: i64) -> OneSidedCode {
        let t = (self.right_start() - z).max(0);
        let transient = (0..t).map(|m| self.symbol_at(z + m)).collect();
        let period = (t..t + self.right.len() as i64)
            .map(|m| self.symbol_at(z + m))
            .collect();
        OneSidedCode::canonical(transient, period, Direction::Positive)
    }

    /// `(w_z, w_{z-1}, …)` as a negative code.
    pub fn negative_part_from(&self, z: i64) -> OneSidedCode {
        let t = (z - self.left_end()).max(0);
        let transient = (0..t).map(|m| self.symbol_at(z - m)).collect();
        let period = (t..t + self.left.len() as i64)
            .map(|m| self.symbol_at(z - m))
            .collect();
        OneSidedCode::canonical(transient, period, Direction::Negative)
    }

    pub fn positive_part(&self) -> OneSidedCode {
        self.positive_part_from(0)
    }

    pub fn negative_part(&self) -> OneSidedCode {
        self.negative_part_from(0)
    }

    /// Every adjacent pair `(w_z, w_{z+1})` that occurs anywhere in the sequence.
    pub fn transitions(&self) -> Vec<(Symbol, Symbol)> {
        let mut out = Vec::new();
        let cyclic = |w: &[Symbol], out: &mut Vec<(Symbol, Symbol)>| {
            for i in 0..w.len() {
                out.push((w[i], w[(i + 1) % w.len()]));
            }
        };
        cyclic(&self.left, &mut out);
        cyclic(&self.right, &mut out);
        let mut middle = vec![*self.left.last().unwrap()];
        middle.extend_from_slice(&self.core);
        middle.push(self.right[0]);
        out.extend(middle.windows(2).map(|p| (p[0], p[1])));
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn max_symbol(&self) -> Symbol {
        self.left
            .iter()
            .chain(&self.core)
            .chain(&self.right)
            .copied()
            .max()
            .unwrap_or(0)
    }
}

/// Symbols above 9 are bracketed, so `1[12]3` is the word 1, 12, 3.
fn write_word(f: &mut fmt::Formatter<'_>, word: &[Symbol]) -> fmt::Result {
    for &s in word {
        if s > 9 {
            write!(f, "[{s}]")?;
        } else {
            write!(f, "{s}")?;
        }
    }
    Ok(())
}

impl fmt::Display for BiCode {
    /// `(L)* . CORE . (R)* @ anchor`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_word(f, &self.left)?;
        f.write_str(")* . ")?;
        if !self.core.is_empty() {
            write_word(f, &self.core)?;
            f.write_str(" ")?;
        }
        f.write_str(". (")?;
        write_word(f, &self.right)?;
        write!(f, ")* @ {}", self.anchor())
    }
}

impl fmt::Display for OneSidedCode {
    /// Positive codes print as `TRANSIENT.(PERIOD)*`; negative codes print left to right as
    /// `(PERIOD)*.TRANSIENT`, position 0 being the rightmost symbol.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.direction {
            Direction::Positive => {
                write_word(f, &self.transient)?;
                f.write_str(".(")?;
                write_word(f, &self.period)?;
                f.write_str(")*")
            }
            Direction::Negative => {
                let period: Vec<Symbol> = self.period.iter().rev().copied().collect();
                let transient: Vec<Symbol> = self.transient.iter().rev().copied().collect();
                f.write_str("(")?;
                write_word(f, &period)?;
                f.write_str(")*.")?;
                write_word(f, &transient)
            }
        }
    }
}

impl serde::Serialize for BiCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for OneSidedCode {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// With `commas`, symbols are comma separated; otherwise every digit is a symbol and
/// longer numbers are bracketed.
fn parse_word(s: &str, commas: bool) -> Result<Vec<Symbol>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let parse = |tok: &str| -> Result<Symbol> {
        let v: Symbol = tok
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad symbol {tok:?}")))?;
        if v == 0 {
            return Err(Error::Parse("symbols are 1-based".into()));
        }
        Ok(v)
    };
    if commas {
        return s.split(',').map(parse).collect();
    }
    // one digit per symbol, or a bracketed number
    let mut out = Vec::new();
    let mut chars = s.chars().filter(|c| !c.is_whitespace());
    while let Some(c) = chars.next() {
        if c == '[' {
            let mut tok = String::new();
            loop {
                match chars.next() {
                    Some(']') => break,
                    Some(d) => tok.push(d),
                    None => return Err(Error::Parse(format!("unclosed bracket in {s:?}"))),
                }
            }
            out.push(parse(&tok)?);
        } else {
            out.push(parse(c.encode_utf8(&mut [0u8; 4]))?);
        }
    }
    Ok(out)
}

fn parse_repeat(s: &str, commas: bool) -> Result<Vec<Symbol>> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(")*"))
        .ok_or_else(|| Error::Parse(format!("expected (WORD)*, got {s:?}")))?;
    let w = parse_word(inner, commas)?;
    if w.is_empty() {
        return Err(Error::Parse("periodic word must be nonempty".into()));
    }
    Ok(w)
}

impl FromStr for BiCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (body, anchor) = match s.split_once('@') {
            Some((b, a)) => {
                let a = a.trim();
                let anchor = a
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad anchor {a:?}")))?;
                (b, anchor)
            }
            None => (s, 0),
        };
        let parts: Vec<&str> = body.split('.').collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!(
                "expected (L)* . CORE . (R)*, got {s:?}"
            )));
        }
        // a comma anywhere switches the whole literal to comma-separated symbols
        let commas = body.contains(',');
        let left = parse_repeat(parts[0], commas)?;
        let core = parse_word(parts[1], commas)?;
        let right = parse_repeat(parts[2], commas)?;
        BiCode::new(left, core, right, anchor)
    }
}

impl FromStr for OneSidedCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let commas = s.contains(',');
        if s.ends_with(")*") {
            // TRANSIENT.(PERIOD)* or (PERIOD)*
            let (transient, period) = match s.rfind(".(") {
                Some(idx) => (&s[..idx], &s[idx + 1..]),
                None => ("", s),
            };
            return OneSidedCode::new(
                parse_word(transient, commas)?,
                parse_repeat(period, commas)?,
                Direction::Positive,
            );
        }
        let idx = s
            .find(")*")
            .ok_or_else(|| Error::Parse(format!("bad one-sided code {s:?}")))?;
        let period = parse_repeat(&s[..idx + 2], commas)?;
        let rest = s[idx + 2..].trim_start_matches('.');
        let transient = parse_word(rest, commas)?;
        OneSidedCode::new(
            transient.into_iter().rev().collect(),
            period.into_iter().rev().collect(),
            Direction::Negative,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pos(t: &[Symbol], p: &[Symbol]) -> OneSidedCode {
        OneSidedCode::new(t.to_vec(), p.to_vec(), Direction::Positive).unwrap()
    }

    #[test]
    fn one_sided_canonical_form() {
        assert_eq!(pos(&[1, 2, 2], &[2, 2]), pos(&[1], &[2]));
        assert_eq!(pos(&[1, 2, 1], &[2, 1]), pos(&[1], &[2, 1]));
        assert_eq!(pos(&[], &[1, 2, 1, 2]).period(), &[1, 2]);
        assert_eq!(pos(&[2], &[1, 2]), pos(&[], &[2, 1]));
        assert!(pos(&[2], &[1, 2]).is_purely_periodic());
    }

    #[test]
    fn tail_drops_head() {
        let c = pos(&[1], &[2]);
        assert_eq!(c.tail(), pos(&[], &[2]));
        assert_eq!(pos(&[], &[1, 2]).tail(), pos(&[], &[2, 1]));
    }

    #[test]
    fn bicode_symbols_and_anchor() {
        let w: BiCode = "(1)* . 1 . (2)* @ 0".parse().unwrap();
        assert_eq!(w.symbol_at(0), 1);
        assert_eq!(w.symbol_at(-5), 1);
        assert_eq!(w.symbol_at(1), 2);
        // canonical: core absorbed into the left period
        assert!(w.core().is_empty());
        assert_eq!(w.right_start(), 1);
    }

    #[test]
    fn periodic_codes_are_normalized() {
        let a = BiCode::periodic(vec![1, 2]).unwrap();
        let b: BiCode = "(21)* . . (21)* @ 1".parse().unwrap();
        assert!(b.is_periodic());
        assert_eq!(a, b);
        assert_eq!(a.shift(2), a);
        assert_ne!(a.shift(1), a);
        assert_eq!(a.shift(1), BiCode::periodic(vec![2, 1]).unwrap());
        assert_eq!(
            BiCode::periodic(vec![1, 1]).unwrap(),
            BiCode::periodic(vec![1]).unwrap()
        );
    }

    #[test]
    fn touching_regions_are_not_periodic() {
        let w: BiCode = "(12)* . . (21)* @ 0".parse().unwrap();
        assert!(!w.is_periodic());
        let v: BiCode = "(12)* . 2 . (12)* @ 0".parse().unwrap();
        assert_eq!(w, v.shift(0));
        for z in -6..6 {
            assert_eq!(w.symbol_at(z), v.symbol_at(z));
        }
    }

    #[test]
    fn parts_of_a_step_code() {
        let w: BiCode = "(1)* . . (2)* @ 0".parse().unwrap();
        assert_eq!(w.positive_part(), pos(&[], &[2]));
        let neg = w.negative_part();
        assert_eq!(neg.transient(), &[2]);
        assert_eq!(neg.period(), &[1]);
        let c: BiCode = "(1)* . . (1)* @ 3".parse().unwrap();
        assert_eq!(c.positive_part(), pos(&[], &[1]));
    }

    #[test]
    fn literal_round_trip_and_wide_symbols() {
        let w: BiCode = "(1,12)* . 3,4 . (12)* @ 1".parse().unwrap();
        assert_eq!(w.symbol_at(0), 4);
        assert_eq!(w.symbol_at(1), 12);
        let printed = w.to_string();
        assert_eq!(printed.parse::<BiCode>().unwrap(), w);
        assert_eq!(w.right_period(), &[12]);
        let digits: BiCode = "(1)* . . (12)*".parse().unwrap();
        assert_eq!(digits.right_period(), &[1, 2]);
        let lone: BiCode = "(1,10)* . . (10)*".parse().unwrap();
        let single = BiCode::periodic(vec![10]).unwrap();
        assert_eq!(single.to_string(), "([10])* . . ([10])* @ 0");
        assert_eq!(single.to_string().parse::<BiCode>().unwrap(), single);
        assert_eq!(lone.to_string().parse::<BiCode>().unwrap(), lone);
        assert_eq!("(1[10])* . . ([10])*".parse::<BiCode>().unwrap(), lone);
        assert!("([10)* . . (1)*".parse::<BiCode>().is_err());
        assert!("(1)* . 1".parse::<BiCode>().is_err());
        assert!("()* . 1 . (2)*".parse::<BiCode>().is_err());
        assert!("(1)* . 0 . (2)*".parse::<BiCode>().is_err());
        let one: OneSidedCode = "1.(2)*".parse().unwrap();
        assert_eq!(one, pos(&[1], &[2]));
        assert_eq!(one.to_string(), "1.(2)*");
        let neg: OneSidedCode = "(12)*.3".parse().unwrap();
        assert_eq!(neg.direction(), Direction::Negative);
        assert_eq!(neg.symbol(0), 3);
        assert_eq!(neg.symbol(1), 2);
        assert_eq!(neg.to_string().parse::<OneSidedCode>().unwrap(), neg);
    }

    #[test]
    fn from_halves_places_both_parts() {
        let neg = OneSidedCode::new(vec![3, 2], vec![1], Direction::Negative).unwrap();
        let p = pos(&[4], &[5, 6]);
        let w = BiCode::from_halves(&neg, &p, 7).unwrap();
        assert_eq!(w.symbol_at(7), 3);
        assert_eq!(w.symbol_at(6), 2);
        assert_eq!(w.symbol_at(5), 1);
        assert_eq!(w.symbol_at(8), 4);
        assert_eq!(w.symbol_at(9), 5);
        assert_eq!(w.symbol_at(10), 6);
        assert_eq!(w.negative_part_from(7), neg);
        assert_eq!(w.positive_part_from(8), p);
    }

    fn word(max_len: usize) -> impl Strategy<Value = Vec<Symbol>> {
        prop::collection::vec(1usize..=3, 0..=max_len)
    }

    fn bicode() -> impl Strategy<Value = (Vec<Symbol>, Vec<Symbol>, Vec<Symbol>, i64)> {
        (
            word(4).prop_filter("nonempty", |w| !w.is_empty()),
            word(5),
            word(4).prop_filter("nonempty", |w| !w.is_empty()),
            -8i64..8,
        )
    }

    fn naive(left: &[Symbol], core: &[Symbol], right: &[Symbol], anchor: i64, z: i64) -> Symbol {
        let idx = z + anchor;
        let c = core.len() as i64;
        if idx >= c {
            right[((idx - c) as usize) % right.len()]
        } else if idx >= 0 {
            core[idx as usize]
        } else {
            let back = ((-idx - 1) as usize) % left.len();
            left[left.len() - 1 - back]
        }
    }

    proptest! {
        #[test]
        fn canonical_form_preserves_the_sequence((l, c, r, a) in bicode()) {
            let w = BiCode::new(l.clone(), c.clone(), r.clone(), a).unwrap();
            for z in -30..30 {
                prop_assert_eq!(w.symbol_at(z), naive(&l, &c, &r, a, z));
            }
        }

        #[test]
        fn equal_sequences_have_equal_forms((l, c, r, a) in bicode(), (l2, c2, r2, a2) in bicode()) {
            let w = BiCode::new(l.clone(), c.clone(), r.clone(), a).unwrap();
            let v = BiCode::new(l2.clone(), c2.clone(), r2.clone(), a2).unwrap();
            // sequences with left/right periods ≤ 4 and cores ≤ 5 are determined by a
            // window of length 2 * (5 + 8 + 2 * 12)
            let same = (-80..80).all(|z| w.symbol_at(z) == v.symbol_at(z));
            prop_assert_eq!(same, w == v);
        }

        #[test]
        fn shift_is_invertible_and_reindexes((l, c, r, a) in bicode(), s in -10i64..10) {
            let w = BiCode::new(l, c, r, a).unwrap();
            let sh = w.shift(s);
            prop_assert_eq!(sh.shift(-s), w.clone());
            for z in -20..20 {
                prop_assert_eq!(sh.symbol_at(z), w.symbol_at(z + s));
            }
        }

        #[test]
        fn literal_round_trip((l, c, r, a) in bicode()) {
            let w = BiCode::new(l, c, r, a).unwrap();
            prop_assert_eq!(w.to_string().parse::<BiCode>().unwrap(), w);
        }

        #[test]
        fn halves_reassemble((l, c, r, a) in bicode(), cut in -10i64..10) {
            let w = BiCode::new(l, c, r, a).unwrap();
            let back = BiCode::from_halves(&w.negative_part_from(cut), &w.positive_part_from(cut + 1), cut).unwrap();
            prop_assert_eq!(back, w);
        }
    }
}
