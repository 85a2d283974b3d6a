//! Dense univariate polynomials over F_p, coefficients low to high.
//! Used for extension-field reduction, inversion and irreducibility tests.

use super::prime::{add_mod, inv_mod, mul_mod, sub_mod};

pub type Poly = Vec<u64>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn sub(a: &[u64], b: &[u64], p: u64) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            sub_mod(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
                p,
            )
        })
        .collect();
    trim(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(out)
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(a: &[u64], b: &[u64], p: u64) -> (Poly, Poly) {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(b[db], p).expect("nonzero leading coefficient");
    let mut rem = trim(a.to_vec());
    let mut quo = vec![0u64; rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let c = mul_mod(rem[dr], lead_inv, p);
        let shift = dr - db;
        quo[shift] = c;
        for (i, &bc) in b[..=db].iter().enumerate() {
            rem[shift + i] = sub_mod(rem[shift + i], mul_mod(c, bc, p), p);
        }
        rem = trim(rem);
    }
    (trim(quo), rem)
}

pub fn rem(a: &[u64], b: &[u64], p: u64) -> Poly {
    divrem(a, b, p).1
}

pub fn mul_rem(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Poly {
    rem(&mul(a, b, p), m, p)
}

/// `base^e mod m`.
pub fn pow_rem(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Poly {
    let mut acc: Poly = vec![1];
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_rem(&acc, &b, m, p);
        }
        b = mul_rem(&b, &b, m, p);
        e >>= 1;
    }
    rem(&acc, m, p)
}

pub fn monic(a: &[u64], p: u64) -> Poly {
    let a = trim(a.to_vec());
    match degree(&a) {
        None => a,
        Some(d) => {
            let inv = inv_mod(a[d], p).expect("nonzero lead");
            a.iter().map(|&c| mul_mod(c, inv, p)).collect()
        }
    }
}

pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
pub fn inv_rem(a: &[u64], m: &[u64], p: u64) -> Option<Poly> {
    let mut r0 = trim(m.to_vec());
    let mut r1 = rem(a, m, p);
    let mut s0: Poly = Vec::new();
    let mut s1: Poly = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r0 is the gcd up to a unit
    let d = degree(&r0)?;
    if d != 0 {
        return None;
    }
    let u = inv_mod(r0[0], p)?;
    Some(rem(
        &s0.iter().map(|&c| mul_mod(c, u, p)).collect::<Vec<_>>(),
        m,
        p,
    ))
}

/// Rabin's irreducibility test for a monic polynomial of degree `r >= 1`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let r = match degree(&f) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    if r == 1 {
        return true;
    }
    let t: Poly = vec![0, 1];
    // t^(p^k) mod f
    let frob = |k: usize| -> Poly {
        let mut x = t.clone();
        for _ in 0..k {
            x = pow_rem(&x, p, &f, p);
        }
        x
    };
    if sub(&frob(r), &rem(&t, &f, p), p) != Vec::<u64>::new() {
        return false;
    }
    for d in super::prime::prime_factors(r as u64) {
        let h = sub(&frob(r / d as usize), &t, p);
        if degree(&gcd(&f, &h, p)) != Some(0) {
            return false;
        }
    }
    true
}

pub fn eval(a: &[u64], x: u64, p: u64) -> u64 {
    a.iter()
        .rev()
        .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_identity() {
        let p = 5;
        let a = vec![1, 2, 3, 4, 1];
        let b = vec![2, 0, 1];
        let (q, r) = divrem(&a, &b, p);
        let back = trim(
            mul(&q, &b, p)
                .iter()
                .zip(r.iter().chain(std::iter::repeat(&0)))
                .map(|(&x, &y)| add_mod(x, y, p))
                .collect(),
        );
        assert_eq!(back, a);
    }

    #[test]
    fn rabin_small_cases() {
        assert!(is_irreducible(&[1, 1, 1], 2));
        assert!(!is_irreducible(&[1, 0, 1], 2));
        assert!(is_irreducible(&[1, 0, 1], 3));
        assert!(!is_irreducible(&[0, 1, 1], 3));
        // t^4 + t + 1 over F_2
        assert!(is_irreducible(&[1, 1, 0, 0, 1], 2));
        // (t^2+t+1)^2 = t^4 + t^2 + 1
        assert!(!is_irreducible(&[1, 0, 1, 0, 1], 2));
    }

    #[test]
    fn inverse_mod_polynomial() {
        let m = vec![1, 1, 1];
        let a = vec![0, 1];
        let inv = inv_rem(&a, &m, 2).unwrap();
        assert_eq!(mul_rem(&a, &inv, &m, 2), vec![1]);
        assert_eq!(eval(&[1, 1, 1], 1, 2), 1);
    }
}
