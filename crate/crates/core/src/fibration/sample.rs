//! Deterministic enumeration of cyclotomic field elements, used to pick
//! generic parameter values when sampling fibers.

use crate::exactfield::{euler_phi, CycloElem, Rational};
use num::BigInt;

/// Enumerates every element of `Q(zeta_order)` with integer coordinates in
/// the power basis, ordered by height (the sup-norm of the coordinate
/// vector) and, within a height, by coordinate position with the value
/// order `0, 1, -1, 2, -2, ...`.
///
/// The sequence starts `0, 1, -1, 2, -2, ...` for order `1` and never
/// repeats an element, so skipping a finite excluded set always terminates.
pub fn enumerate_field_elements(order: u32) -> impl Iterator<Item = CycloElem> {
    let deg = euler_phi(order) as usize;
    (0u64..).flat_map(move |height| {
        vectors_of_height(deg, height)
            .into_iter()
            .map(move |v| element_from(order, &v))
    })
}

fn element_from(order: u32, coords: &[i64]) -> CycloElem {
    let mut acc = CycloElem::zero(order);
    for (i, &c) in coords.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let term = CycloElem::from_power(order, i as u64, Rational::from(BigInt::from(c)));
        acc = acc + term;
    }
    acc
}

/// All integer vectors of length `deg` whose sup-norm equals `height`,
/// in deterministic order.
fn vectors_of_height(deg: usize, height: u64) -> Vec<Vec<i64>> {
    let h = height as i64;
    let mut values = vec![0i64];
    for v in 1..=h {
        values.push(v);
        values.push(-v);
    }
    let mut out = Vec::new();
    let mut current = vec![0usize; deg];
    loop {
        if current.iter().any(|&ix| values[ix].abs() == h) {
            out.push(current.iter().map(|&ix| values[ix]).collect());
        }
        // odometer over value indices, first position fastest, so constants
        // come before combinations involving higher basis powers
        let mut pos = 0;
        loop {
            if pos == deg {
                return out;
            }
            current[pos] += 1;
            if current[pos] < values.len() {
                break;
            }
            current[pos] = 0;
            pos += 1;
        }
    }
}
