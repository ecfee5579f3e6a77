//! Characteristic polynomials and root finding, used to pick eigenvalues
//! when splitting modules.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FieldSpec, Matrix, Scalar};

/// Coefficients of the monic characteristic polynomial, lowest degree first.
pub fn charpoly(m: &Matrix) -> Vec<Scalar> {
    assert!(m.is_square());
    let field = m.field();
    let n = m.rows();
    let mut h = m.clone();
    // Hessenberg reduction by similarity transforms.
    for col in 1..n.saturating_sub(1) {
        let Some(i) = (col..n).find(|&i| !h.get(i, col - 1).is_zero()) else {
            continue;
        };
        if i != col {
            for c in 0..n {
                let (a, b) = (h.get(i, c).clone(), h.get(col, c).clone());
                h.set(i, c, b);
                h.set(col, c, a);
            }
            for r in 0..n {
                let (a, b) = (h.get(r, i).clone(), h.get(r, col).clone());
                h.set(r, i, b);
                h.set(r, col, a);
            }
        }
        let pivot_inv = h.get(col, col - 1).inv().expect("nonzero pivot");
        for j in col + 1..n {
            let u = h.get(j, col - 1) * &pivot_inv;
            if u.is_zero() {
                continue;
            }
            for c in 0..n {
                let v = h.get(j, c) - &(&u * h.get(col, c));
                h.set(j, c, v);
            }
            for r in 0..n {
                let v = h.get(r, col) + &(&u * h.get(r, j));
                h.set(r, col, v);
            }
        }
    }
    let at = |a: usize, b: usize| h.get(a - 1, b - 1).clone();
    let mut polys: Vec<Vec<Scalar>> = vec![vec![field.one()]];
    for mm in 1..=n {
        let prev = &polys[mm - 1];
        let mut p = vec![field.zero(); mm + 1];
        for (k, c) in prev.iter().enumerate() {
            p[k + 1] = &p[k + 1] + c;
            p[k] = &p[k] - &(&at(mm, mm) * c);
        }
        let mut t = field.one();
        for i in 1..mm {
            t = &t * &at(mm - i + 1, mm - i);
            let coef = &t * &at(mm - i, mm);
            if coef.is_zero() {
                continue;
            }
            for (k, c) in polys[mm - i - 1].iter().enumerate() {
                p[k] = &p[k] - &(&coef * c);
            }
        }
        polys.push(p);
    }
    polys.pop().unwrap()
}

/// Roots lying in the base field, each listed once. Over the rationals the
/// search uses the rational root theorem and may skip roots whose
/// coefficients are too large to factor by trial division.
pub fn roots(poly: &[Scalar], field: FieldSpec) -> Vec<Scalar> {
    match field {
        FieldSpec::Rationals => rational_roots(poly).into_iter().map(Scalar::Rational).collect(),
        FieldSpec::Prime(p) => {
            let coeffs: Vec<u64> = poly
                .iter()
                .map(|s| match s {
                    Scalar::Modular { value, .. } => *value,
                    Scalar::Rational(_) => unreachable!("field mismatch"),
                })
                .collect();
            prime_roots(&coeffs, p)
                .into_iter()
                .map(|v| Scalar::Modular { value: v, modulus: p })
                .collect()
        }
    }
}

const TRIAL_LIMIT: u64 = 1_000_000;

fn rational_roots(poly: &[Scalar]) -> Vec<BigRational> {
    let mut coeffs: Vec<BigRational> = poly
        .iter()
        .map(|s| s.as_rational().expect("rational polynomial").clone())
        .collect();
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    let mut found = Vec::new();
    if coeffs.len() <= 1 {
        return found;
    }
    let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        found.push(BigRational::zero());
        coeffs.drain(..lead_zeros);
    }
    if coeffs.len() <= 1 {
        return found;
    }
    let denom_lcm = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = coeffs.iter().map(|c| (c * BigRational::from_integer(denom_lcm.clone())).to_integer()).collect();
    let (Some(a0), Some(an)) = (small_divisors(&ints[0]), small_divisors(ints.last().unwrap())) else {
        return found;
    };
    for d in &a0 {
        for e in &an {
            for sign in [1i64, -1] {
                let cand = BigRational::new(BigInt::from(sign) * BigInt::from(*d), BigInt::from(*e));
                if found.contains(&cand) {
                    continue;
                }
                let value = ints.iter().rev().fold(BigRational::zero(), |acc, c| acc * &cand + BigRational::from_integer(c.clone()));
                if value.is_zero() {
                    found.push(cand);
                }
            }
        }
    }
    found
}

fn small_divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.abs().to_u64()?;
    if n > TRIAL_LIMIT * TRIAL_LIMIT {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

const BRUTE_FORCE_PRIME: u64 = 4096;

fn prime_roots(coeffs: &[u64], p: u64) -> Vec<u64> {
    let f = trim(coeffs.to_vec());
    if f.len() <= 1 {
        return Vec::new();
    }
    if p <= BRUTE_FORCE_PRIME {
        return (0..p).filter(|&x| eval(&f, x, p) == 0).collect();
    }
    // The product of the distinct linear factors is gcd(f, x^p - x).
    let xp = pow_mod_poly(&[0, 1], p, &f, p);
    let mut xp_minus_x = xp;
    if xp_minus_x.len() < 2 {
        xp_minus_x.resize(2, 0);
    }
    xp_minus_x[1] = (xp_minus_x[1] + p - 1) % p;
    let g = gcd(&f, &trim(xp_minus_x), p);
    let mut out = Vec::new();
    split_linear(g, p, 1, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(g: Vec<u64>, p: u64, mut shift: u64, out: &mut Vec<u64>) {
    match g.len() {
        0 | 1 => {}
        2 => {
            let inv = inv_mod(g[1], p);
            out.push((p - g[0] * inv % p) % p);
        }
        _ => loop {
            // gcd(g, (x + a)^((p-1)/2) - 1) splits g for most shifts a.
            let mut h = pow_mod_poly(&[shift % p, 1], (p - 1) / 2, &g, p);
            if h.is_empty() {
                h.push(0);
            }
            h[0] = (h[0] + p - 1) % p;
            let d = gcd(&g, &trim(h), p);
            shift += 1;
            if d.len() > 1 && d.len() < g.len() {
                let q = div_exact(&g, &d, p);
                split_linear(d, p, shift, out);
                split_linear(q, p, shift, out);
                return;
            }
        },
    }
}

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn eval(f: &[u64], x: u64, p: u64) -> u64 {
    f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let (mut base, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

fn rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let f = r[r.len() - 1] * lead_inv % p;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - f * c % p) % p;
        }
        r = trim(r);
    }
    r
}

fn div_exact(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    let mut q = vec![0; a.len() - db];
    for shift in (0..q.len()).rev() {
        let f = r[shift + db] * lead_inv % p;
        q[shift] = f;
        for (i, &c) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - f * c % p) % p;
        }
    }
    trim(q)
}

fn mul_mod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    rem(&out, m, p)
}

fn pow_mod_poly(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(&acc, &b, m, p);
        }
        b = mul_mod(&b, &b, m, p);
        e >>= 1;
    }
    acc
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let inv = inv_mod(lead, p);
        x.iter_mut().for_each(|c| *c = *c * inv % p);
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charpoly_of_companion_like_matrix() {
        let q = FieldSpec::Rationals;
        let m = Matrix::from_i64_rows(q, &[vec![2, 1, 0], vec![0, 2, 0], vec![1, 0, 3]]);
        // (x-2)^2 (x-3) = x^3 - 7x^2 + 16x - 12
        let expect: Vec<Scalar> = [-12, 16, -7, 1].iter().map(|&v| q.from_i64(v)).collect();
        assert_eq!(charpoly(&m), expect);
        let mut r = roots(&charpoly(&m), q);
        r.sort_by_key(|s| s.to_string());
        assert_eq!(r, vec![q.from_i64(2), q.from_i64(3)]);
    }

    #[test]
    fn rational_roots_with_fractions() {
        let q = FieldSpec::Rationals;
        // (2x - 1)(x + 3) = 2x^2 + 5x - 3
        let poly: Vec<Scalar> = [-3, 5, 2].iter().map(|&v| q.from_i64(v)).collect();
        let r = roots(&poly, q);
        assert!(r.contains(&q.parse("1/2").unwrap()));
        assert!(r.contains(&q.from_i64(-3)));
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn large_prime_roots_split() {
        let p = 1_000_003;
        let f = FieldSpec::prime(p).unwrap();
        // (x - 5)(x - 77)(x^2 + 1); -1 is a non-residue mod p since p = 3 mod 4
        let lin = |a: i64| vec![f.from_i64(-a), f.one()];
        let mul = |a: &[Scalar], b: &[Scalar]| {
            let mut out = vec![f.zero(); a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                for (j, y) in b.iter().enumerate() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
            out
        };
        let quad = vec![f.one(), f.zero(), f.one()];
        let poly = mul(&mul(&lin(5), &lin(77)), &quad);
        let r = roots(&poly, f);
        assert_eq!(r, vec![f.from_i64(5), f.from_i64(77)]);
    }
}
