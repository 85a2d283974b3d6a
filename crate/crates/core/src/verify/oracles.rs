//! Reference computations used to cross-check the library. Each one is written
//! from the definitions, sharing no code with the routine it checks.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::dickson::MultiPoly;
use crate::mono::{CohCtx, Monomial, TensorClass};

/// 0!, 1!, …, n! as big integers.
pub fn factorials(n: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(n + 1);
    out.push(BigUint::one());
    for i in 1..=n {
        let next = &out[i - 1] * BigUint::from(i);
        out.push(next);
    }
    out
}

fn reduce(x: &BigUint, p: u64) -> u64 {
    (x % BigUint::from(p)).to_u64().expect("residue fits")
}

/// (Σ parts)! / Π parts! mod p, from exact factorials.
pub fn multinomial_mod(f: &[BigUint], parts: &[u64], p: u64) -> u64 {
    let total: u64 = parts.iter().sum();
    let mut den = BigUint::one();
    for &k in parts {
        den *= &f[k as usize];
    }
    reduce(&(&f[total as usize] / den), p)
}

pub fn binomial_mod(f: &[BigUint], m: u64, k: u64, p: u64) -> u64 {
    if k > m {
        return 0;
    }
    multinomial_mod(f, &[k, m - k], p)
}

pub fn digit_sum(p: u64, mut m: u128) -> u64 {
    let mut s = 0;
    while m > 0 {
        s += (m % p as u128) as u64;
        m /= p as u128;
    }
    s
}

/// Smallest m ≤ `bound` with base-p digit sum s, by scanning.
pub fn min_m_scan(p: u64, s: u64, bound: u64) -> Option<u64> {
    (0..=bound).find(|&m| digit_sum(p, m as u128) == s)
}

/// Smallest m with base-p digit sum s, by dynamic programming over the digits
/// from the most significant one down.
pub fn min_m_dp(p: u64, s: u64) -> Option<u128> {
    let len = s.div_ceil(p - 1) as u32;
    fn best(
        p: u64,
        len: u32,
        s: u64,
        memo: &mut HashMap<(u32, u64), Option<u128>>,
    ) -> Option<u128> {
        if s == 0 {
            return Some(0);
        }
        if len == 0 || s > len as u64 * (p - 1) {
            return None;
        }
        if let Some(v) = memo.get(&(len, s)) {
            return *v;
        }
        let place = (p as u128).checked_pow(len - 1);
        let mut out: Option<u128> = None;
        for d in 0..p.min(s + 1) {
            let Some(rest) = best(p, len - 1, s - d, memo) else {
                continue;
            };
            let cand = place
                .and_then(|pl| pl.checked_mul(d as u128))
                .and_then(|x| x.checked_add(rest));
            if let Some(c) = cand {
                out = Some(out.map_or(c, |o| o.min(c)));
            }
        }
        memo.insert((len, s), out);
        out
    }
    best(p, len, s, &mut HashMap::new())
}

/// (a choose b)_q by the q-Pascal recursion.
pub fn gaussian_pascal(q: u64, a: u32, b: u32) -> BigUint {
    let q = BigUint::from(q);
    let mut row = vec![BigUint::one()];
    for n in 1..=a {
        let mut next = vec![BigUint::zero(); n as usize + 1];
        for k in 0..=n as usize {
            let left = if k > 0 {
                row[k - 1].clone()
            } else {
                BigUint::zero()
            };
            let right = if k < row.len() {
                q.pow(k as u32) * &row[k]
            } else {
                BigUint::zero()
            };
            next[k] = left + right;
        }
        row = next;
    }
    row.get(b as usize).cloned().unwrap_or_default()
}

/// Σ p^k (a_k + b_k) reduced mod q − 1, with q = p^r.
fn weight_ok(p: u64, r: usize, m: &Monomial) -> bool {
    let q = (p as u128).pow(r as u32);
    let mut w: u128 = 0;
    let mut pk: u128 = 1;
    for k in 0..r {
        w += pk * (m.a()[k] as u128 + m.b()[k] as u128);
        pk *= p as u128;
    }
    w.is_multiple_of(q - 1)
}

fn deg(p: u64, m: &Monomial) -> u64 {
    if p == 2 {
        m.b().iter().sum()
    } else {
        m.a().iter().map(|&x| x as u64).sum::<u64>() + 2 * m.b().iter().sum::<u64>()
    }
}

/// Δ(m) by enumerating every factorisation m = m' m'' directly: each exterior
/// generator goes to one side, each y-exponent splits as u + v with coefficient
/// C(b, u), signs from moving right-hand exterior generators past left-hand ones.
pub fn coproduct_oracle(ctx: &CohCtx, f: &[BigUint], m: &Monomial) -> TensorClass {
    let p = ctx.p();
    let r = ctx.r();
    let mut out = TensorClass::zero(p, 2);
    let ext: Vec<usize> = (0..r).filter(|&k| m.a()[k] == 1).collect();
    for mask in 0u32..(1 << ext.len()) {
        let mut a1 = vec![0u8; r];
        let mut a2 = vec![0u8; r];
        for (bit, &k) in ext.iter().enumerate() {
            if mask & (1 << bit) == 0 {
                a1[k] = 1;
            } else {
                a2[k] = 1;
            }
        }
        // inversions: a generator on the right with a smaller index than one on the left
        let mut inv = 0;
        for i in 0..r {
            for j in i + 1..r {
                if a2[i] == 1 && a1[j] == 1 {
                    inv += 1;
                }
            }
        }
        let mut splits: Vec<Vec<u64>> = vec![vec![]];
        for k in 0..r {
            splits = splits
                .into_iter()
                .flat_map(|pre| {
                    (0..=m.b()[k]).map(move |u| {
                        let mut v = pre.clone();
                        v.push(u);
                        v
                    })
                })
                .collect();
        }
        for b1 in splits {
            let b2: Vec<u64> = m.b().iter().zip(&b1).map(|(b, u)| b - u).collect();
            let left = Monomial::new(a1.clone(), b1.clone()).expect("valid");
            let right = Monomial::new(a2.clone(), b2.clone()).expect("valid");
            if !weight_ok(p, r, &left) || !weight_ok(p, r, &right) {
                continue;
            }
            let mut c = 1u64;
            for k in 0..r {
                c = c * binomial_mod(f, m.b()[k], b1[k], p) % p;
            }
            if inv % 2 == 1 {
                c = (p - c) % p;
            }
            if c != 0 {
                out.add_term(vec![left, right], c).expect("arity 2");
            }
        }
    }
    out
}

/// The coefficient of x^{A_1}y^{B_1} ⊗ … ⊗ x^{A_n}y^{B_n} in χ_α(ρ_{F_q^n}), or
/// `None` if the tuple is not an admissible splitting of α.
pub fn chi_term_oracle(
    ctx: &CohCtx,
    f: &[BigUint],
    alpha: &Monomial,
    factors: &[Monomial],
) -> Option<u64> {
    let p = ctx.p();
    let r = ctx.r();
    let n = factors.len();
    for k in 0..r {
        let a: u64 = factors.iter().map(|m| m.a()[k] as u64).sum();
        let b: u64 = factors.iter().map(|m| m.b()[k]).sum();
        if a != alpha.a()[k] as u64 || b != alpha.b()[k] {
            return None;
        }
    }
    if factors
        .iter()
        .any(|m| deg(p, m) == 0 || !weight_ok(p, r, m))
    {
        return None;
    }
    let mut c = 1u64;
    for k in 0..r {
        let parts: Vec<u64> = factors.iter().map(|m| m.b()[k]).collect();
        c = c * multinomial_mod(f, &parts, p) % p;
    }
    let owner: Vec<usize> = (0..r)
        .filter_map(|k| factors.iter().position(|m| m.a()[k] == 1))
        .collect();
    let mut inv = 0;
    for i in 0..owner.len() {
        for j in i + 1..owner.len() {
            if owner[i] > owner[j] {
                inv += 1;
            }
        }
    }
    if (inv + n - 1) % 2 == 1 {
        c = (p - c) % p;
    }
    Some(c)
}

/// Σ_{c ∈ F_p^n} (Σ c_i z_i)^k by the multinomial theorem, using
/// Σ_{c ∈ F_p} c^e = −1 when e > 0 and (p − 1) | e, and 0 otherwise.
pub fn power_sum_closed_form(f: &[BigUint], p: u64, n: usize, k: u64) -> MultiPoly {
    let mut out = MultiPoly::zero(p, n);
    let mut exps = vec![0u64; n];
    fn go(f: &[BigUint], p: u64, i: usize, left: u64, exps: &mut Vec<u64>, out: &mut MultiPoly) {
        let n = exps.len();
        if i == n - 1 {
            exps[i] = left;
            if exps.iter().all(|&e| e > 0 && e % (p - 1) == 0) {
                let c = multinomial_mod(f, exps, p);
                // each coordinate contributes a factor −1
                let c = if n % 2 == 1 { (p - c) % p } else { c };
                let e: Vec<u32> = exps.iter().map(|&x| x as u32).collect();
                out.add_term(&e, c);
            }
            return;
        }
        for e in 0..=left {
            exps[i] = e;
            go(f, p, i + 1, left - e, exps, out);
        }
    }
    go(f, p, 0, k, &mut exps, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let f = factorials(10);
        assert_eq!(binomial_mod(&f, 5, 2, 7), 3);
        assert_eq!(multinomial_mod(&f, &[1, 1, 1], 5), 1);
        assert_eq!(min_m_dp(3, 5), Some(17));
        assert_eq!(min_m_scan(3, 5, 100), Some(17));
        assert_eq!(gaussian_pascal(2, 4, 2), BigUint::from(35u32));
        assert_eq!(
            power_sum_closed_form(&f, 2, 2, 3).to_string(),
            "z1^2 z2 + z1 z2^2"
        );
    }
}
