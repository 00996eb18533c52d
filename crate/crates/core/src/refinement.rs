//! Binary (horizontal) refinement of a geometric type.
//!
//! The rectangles of the refinement are the horizontal sub-rectangles `H^i_j` of the original
//! partition, numbered by the lexicographic index `r(i, j)`. Each keeps the vertical
//! orientation of its parent rectangle.

use crate::error::{Error, Result};
use crate::geometric_type::{incidence_matrix, GeometricType, HLabel, Sign, VLabel};

/// Lexicographic position of a horizontal label: `r(i, j) = Σ_{i' < i} h_{i'} + j`.
pub fn lex_index(t: &GeometricType, label: HLabel) -> Result<usize> {
    if !t.contains_h(label) {
        return Err(Error::InvalidLabel(label.to_string()));
    }
    let before: usize = (1..label.i).map(|i| t.h(i)).sum();
    Ok(before + label.j)
}

/// The geometric type `B(T)` of the binary refinement. Its incidence matrix is always binary.
pub fn binary_refinement(t: &GeometricType) -> GeometricType {
    let r = |i: usize, j: usize| lex_index(t, HLabel::new(i, j)).expect("label of t");

    let mut hv = Vec::with_capacity(t.alpha());
    let mut rho = Vec::with_capacity(t.alpha());
    let mut eps = Vec::with_capacity(t.alpha());
    // labels come out in lexicographic order, i.e. in increasing r(i, j)
    for lbl in t.h_labels() {
        let VLabel { k, l } = t.rho(lbl);
        let e = t.eps(lbl);
        let hk = t.h(k);
        hv.push((hk, t.v(lbl.i)));
        for j0 in 1..=hk {
            let target_row = match e {
                Sign::Plus => j0,
                Sign::Minus => hk - (j0 - 1),
            };
            rho.push((r(k, target_row), l));
            eps.push(e.to_int());
        }
    }
    GeometricType::from_tables(hv, rho, eps).expect("binary refinement of a valid type is valid")
}

/// Returns `(T, false)` when `A(T)` is already binary, otherwise `(B(T), true)`.
pub fn refine_if_needed(t: &GeometricType) -> (GeometricType, bool) {
    if incidence_matrix(t).is_binary() {
        (t.clone(), false)
    } else {
        (binary_refinement(t), true)
    }
}
