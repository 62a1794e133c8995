//! Degrees of Segre pushforwards.

use crate::ComponentError;
use atlas_arith::{factorial, Integer};

/// Degree in P^{2n+1} of the pushforward of a divisor class
/// x * L_1 + y * L_n on P^1 x P^n under the Segre embedding:
/// L_1 maps to a linear P^n (degree 1) and L_n to the Segre image of
/// P^1 x P^{n-1} (degree n), so the pushforward has degree x + n * y.
pub fn chow_pushforward_degree(x: i64, y: i64, n: usize) -> Result<Integer, ComponentError> {
    if n < 1 || x < 0 || y < 0 {
        return Err(ComponentError::Domain(format!(
            "invalid divisor class ({x}, {y}) on P^1 x P^{n}"
        )));
    }
    Ok(Integer::from(x) + Integer::from(n as i64) * Integer::from(y))
}

/// Pushforward coefficient of the monomial class L_1^{e1} * L_n^{e2} on
/// P^1 x P^n: the multinomial ((1-e1) + (n-e2))! / ((1-e1)! (n-e2)!).
pub fn segre_monomial_pushforward(e1: usize, e2: usize, n: usize) -> Result<Integer, ComponentError> {
    if e1 > 1 || e2 > n {
        return Err(ComponentError::Domain(format!(
            "monomial L1^{e1} Ln^{e2} exceeds the dimension of P^1 x P^{n}"
        )));
    }
    segre_pushforward_multinomial(&[1, n], &[e1, e2])
}

/// General Segre pushforward multinomial for P^{n_1} x ... x P^{n_j} and a
/// monomial with exponents c_alpha <= n_alpha:
/// (sum (n_alpha - c_alpha))! / prod (n_alpha - c_alpha)!.
pub fn segre_pushforward_multinomial(
    ns: &[usize],
    cs: &[usize],
) -> Result<Integer, ComponentError> {
    if ns.len() != cs.len() {
        return Err(ComponentError::Domain("mismatched exponent lists".into()));
    }
    let mut gaps = Vec::with_capacity(ns.len());
    for (&n, &c) in ns.iter().zip(cs) {
        if c > n {
            return Err(ComponentError::Domain(format!(
                "exponent {c} exceeds factor dimension {n}"
            )));
        }
        gaps.push(n - c);
    }
    let total: usize = gaps.iter().sum();
    let mut acc = factorial(total as u64);
    for g in gaps {
        acc /= factorial(g as u64);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn odd_component_degrees() {
        // The preimage component of the degree hypersurface has class
        // (i-2) L_alpha: degree (i-1)(i-2) in the ambient space.
        for i in 3..=7i64 {
            let n = (i - 1) as usize;
            let d = chow_pushforward_degree(0, i - 2, n).unwrap();
            assert_eq!(d, Integer::from((i - 1) * (i - 2)));
            // The complementary-factor component has class alpha L_1 + L_alpha:
            // degree 2(i-1).
            let d2 = chow_pushforward_degree(i - 1, 1, n).unwrap();
            assert_eq!(d2, Integer::from(2 * (i - 1)));
        }
    }

    #[test]
    fn hyperplane_classes_push_forward() {
        assert_eq!(segre_monomial_pushforward(1, 0, 4).unwrap(), Integer::from(1));
        assert_eq!(segre_monomial_pushforward(0, 1, 4).unwrap(), Integer::from(4));
        assert!(segre_monomial_pushforward(2, 0, 4).is_err());
    }

    #[test]
    fn all_gaps_one_gives_factorial() {
        for j in 1..=6usize {
            let ns: Vec<usize> = (0..j).map(|a| a + 2).collect();
            let cs: Vec<usize> = ns.iter().map(|n| n - 1).collect();
            assert_eq!(
                segre_pushforward_multinomial(&ns, &cs).unwrap(),
                factorial(j as u64)
            );
        }
    }
}
