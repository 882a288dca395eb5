//! Cyclotomic polynomials, used to split binomials `P^g ∓ Q^g` into
//! irreducible pieces so that Pochhammer products cancel structurally.

/// Coefficients of Φ_d, lowest degree first.
pub fn cyclotomic(d: u32) -> Vec<i64> {
    assert!(d >= 1);
    // x^d - 1 divided by Φ_e for every proper divisor e
    let mut p = vec![0i64; d as usize + 1];
    p[0] = -1;
    p[d as usize] = 1;
    for e in 1..d {
        if d.is_multiple_of(e) {
            p = div_monic(&p, &cyclotomic(e));
        }
    }
    p
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut q = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (j, dc) in den.iter().enumerate() {
            rem[k + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), vec![-1, 1]);
        assert_eq!(cyclotomic(2), vec![1, 1]);
        assert_eq!(cyclotomic(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic(6), vec![1, -1, 1]);
    }

    #[test]
    fn product_over_divisors_is_x_pow_minus_one() {
        for n in 1..=12u32 {
            let mut acc = vec![1i64];
            for d in divisors(n) {
                let c = cyclotomic(d);
                let mut out = vec![0i64; acc.len() + c.len() - 1];
                for (i, a) in acc.iter().enumerate() {
                    for (j, b) in c.iter().enumerate() {
                        out[i + j] += a * b;
                    }
                }
                acc = out;
            }
            let mut want = vec![0i64; n as usize + 1];
            want[0] = -1;
            want[n as usize] = 1;
            assert_eq!(acc, want);
        }
    }
}
