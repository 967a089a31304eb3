//! Half-twists about arbitrary curves and their detection by pairs of
//! pentagons.

use thiserror::Error;

use super::curve::{NormalCurve, Witness};
use super::generators::Generators;
use super::intersection::intersection_number;
use super::window::CurveWindow;
use super::word::{Letter, Word};
use crate::graph::{detect_two_pentagon, Detection, PentagonIndex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HalfTwistError {
    #[error("curve has no witness word")]
    MissingWitness,
    #[error("curves intersect {0} times (expected 2)")]
    NotTwice(i64),
    #[error(transparent)]
    Curve(#[from] super::curve::CurveError),
}

/// Word of the half-twist about base curve `c_{j+1}`.
pub fn base_twist_word(j: usize) -> Word {
    match j {
        0 => Word::from(vec![Letter::h(1)]),
        1 => Word::from(vec![Letter::h(3)]),
        // Around e40: conjugate of h4 by h1 h2 h3.
        2 => "h1h2h3h4H3H2H1".parse().expect("literal word"),
        3 => Word::from(vec![Letter::h(2)]),
        4 => Word::from(vec![Letter::h(4)]),
        _ => panic!("base curve index {j} out of range"),
    }
}

/// Word of `H_beta^sign` for `beta = u(c_j)`: `u h_j^sign u^-1`.
pub fn half_twist_word(beta: &Witness, sign: i8) -> Word {
    let h = base_twist_word(beta.base);
    let h = if sign >= 0 { h } else { h.inverse() };
    beta.word.concat(&h).concat(&beta.word.inverse())
}

/// `H_beta^sign(alpha)`; requires `i(alpha, beta) = 2` and a witness on `beta`.
pub fn half_twist_of(beta: &NormalCurve, alpha: &NormalCurve, sign: i8) -> Result<NormalCurve, HalfTwistError> {
    let wb = beta.witness.as_ref().ok_or(HalfTwistError::MissingWitness)?;
    let i = intersection_number(beta, alpha)?;
    if i != 2 {
        return Err(HalfTwistError::NotTwice(i));
    }
    let h = half_twist_word(wb, sign);
    let coords = Generators::get().apply_word(&h, &alpha.coords);
    let witness = alpha.witness.as_ref().map(|wa| Witness { word: h.concat(&wa.word), base: wa.base });
    Ok(NormalCurve { coords, witness })
}

/// Window vertices `gamma` detected by two pentagons for `(alpha, beta)`.
pub fn detect_half_twists(w: &CurveWindow, idx: &PentagonIndex, alpha: usize, beta: usize) -> Vec<Detection> {
    detect_two_pentagon(&w.graph, idx, alpha, beta)
}
