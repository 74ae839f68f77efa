//! Exact rational linear-programming feasibility.
//!
//! A single entry point decides whether `{x >= 0 : A x = b}` is nonempty,
//! via a phase-one simplex with Bland's rule. Everything is BigRational,
//! so termination is guaranteed and there are no tolerances anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Is there an `x >= 0` with `A x = b`?
///
/// `a` is row-major, one row per equality constraint, all rows the same
/// length.
pub fn feasible_eq_nonneg(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    assert_eq!(a.len(), b.len(), "one rhs entry per row");
    let m = a.len();
    if m == 0 {
        return true;
    }
    let n = a[0].len();
    debug_assert!(a.iter().all(|r| r.len() == n));

    // tableau over structural columns 0..n and artificial columns n..n+m;
    // row i initially reads  a_i . x + e_i . s = b_i  with b_i >= 0
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    let mut rhs: Vec<BigRational> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<BigRational> = Vec::with_capacity(n + m);
        for j in 0..n {
            row.push(if flip { -a[i][j].clone() } else { a[i][j].clone() });
        }
        for k in 0..m {
            row.push(if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        t.push(row);
        rhs.push(if flip { -b[i].clone() } else { b[i].clone() });
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // phase-one objective: minimize the sum of artificials. Reduced cost of
    // column j is c_j - sum over rows of c_basis * t[i][j], with c = [0,..,1,..].
    loop {
        // entering column: Bland picks the smallest index with negative
        // reduced cost
        let mut entering = None;
        for j in 0..n + m {
            if basis.contains(&j) {
                continue;
            }
            let mut reduced = if j >= n {
                BigRational::one()
            } else {
                BigRational::zero()
            };
            for (i, &bi) in basis.iter().enumerate() {
                if bi >= n {
                    reduced -= &t[i][j];
                }
            }
            if reduced.is_negative() {
                entering = Some(j);
                break;
            }
        }
        let Some(e) = entering else {
            break;
        };

        // leaving row: minimum ratio, ties broken by smallest basis index
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][e].is_positive() {
                let r = &rhs[i] / &t[i][e];
                match &leave {
                    Some((li, lr)) => {
                        if r < *lr || (r == *lr && basis[i] < basis[*li]) {
                            leave = Some((i, r));
                        }
                    }
                    None => leave = Some((i, r)),
                }
            }
        }
        let Some((l, _)) = leave else {
            // unbounded phase-one objective cannot happen (bounded below by 0)
            unreachable!("phase-one simplex is bounded");
        };

        // pivot on (l, e)
        let piv = t[l][e].clone();
        for v in t[l].iter_mut() {
            *v /= &piv;
        }
        rhs[l] /= &piv;
        for i in 0..m {
            if i != l && !t[i][e].is_zero() {
                let factor = t[i][e].clone();
                for j in 0..n + m {
                    let d = &factor * &t[l][j];
                    t[i][j] -= d;
                }
                let d = &factor * &rhs[l];
                rhs[i] -= d;
            }
        }
        basis[l] = e;
    }

    // feasible iff every artificial left in the basis sits at level zero
    let mut objective = BigRational::zero();
    for (i, &bi) in basis.iter().enumerate() {
        if bi >= n {
            objective += &rhs[i];
        }
    }
    objective.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_systems() {
        // x = 1 has a nonnegative solution
        assert!(feasible_eq_nonneg(&[vec![ratio(1, 1)]], &[ratio(1, 1)]));
        // x = -1 does not
        assert!(!feasible_eq_nonneg(&[vec![ratio(1, 1)]], &[ratio(-1, 1)]));
        // -x = -3 does (x = 3)
        assert!(feasible_eq_nonneg(&[vec![ratio(-1, 1)]], &[ratio(-3, 1)]));
    }

    #[test]
    fn two_variable_balance() {
        // x - y = 0, x + y = 1: solution (1/2, 1/2)
        let a = vec![
            vec![ratio(1, 1), ratio(-1, 1)],
            vec![ratio(1, 1), ratio(1, 1)],
        ];
        assert!(feasible_eq_nonneg(&a, &[ratio(0, 1), ratio(1, 1)]));
        // x + y = 1, x + y = 2 is inconsistent
        let a = vec![
            vec![ratio(1, 1), ratio(1, 1)],
            vec![ratio(1, 1), ratio(1, 1)],
        ];
        assert!(!feasible_eq_nonneg(&a, &[ratio(1, 1), ratio(2, 1)]));
    }

    #[test]
    fn redundant_rows_are_fine() {
        let a = vec![
            vec![ratio(1, 1), ratio(1, 1)],
            vec![ratio(2, 1), ratio(2, 1)],
        ];
        assert!(feasible_eq_nonneg(&a, &[ratio(1, 1), ratio(2, 1)]));
    }
}
