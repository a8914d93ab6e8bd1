//! Dense univariate polynomials over a prime field, stored low degree first.
//! Only what the field constructors need: irreducibility and primitivity.

pub(crate) fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        return None;
    }
    let (mut old_r, mut r) = (a as i128 % p as i128, p as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    Some(old_s.rem_euclid(p as i128) as u64)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn deg(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo `m`.
pub(crate) fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = trim(a.to_vec());
    let dm = deg(m).expect("nonzero modulus");
    let lead_inv = inv_mod(m[dm], p).expect("unit leading coefficient");
    while let Some(dr) = deg(&r) {
        if dr < dm {
            break;
        }
        let c = mulmod(r[dr], lead_inv, p);
        let shift = dr - dm;
        for (i, &mi) in m.iter().enumerate().take(dm + 1) {
            let t = mulmod(c, mi, p);
            r[shift + i] = (r[shift + i] + p - t) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulmod(x, y, p)) % p;
        }
    }
    trim(out)
}

pub(crate) fn mulmod_poly(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(a, b, p), m, p)
}

/// `base^exp mod m`.
pub(crate) fn pow_poly(base: &[u64], mut exp: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod_poly(&acc, &b, m, p);
        }
        b = mulmod_poly(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    trim(out)
}

fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin's irreducibility test for a monic `m` of degree `k >= 1`.
pub(crate) fn is_irreducible(m: &[u64], p: u64) -> bool {
    let k = match deg(m) {
        Some(k) if k >= 1 => k,
        _ => return false,
    };
    let x = vec![0u64, 1];
    let pk = (p as u128).pow(k as u32);
    let xq = pow_poly(&x, pk, m, p);
    if !sub(&xq, &rem(&x, m, p), p).is_empty() {
        return false;
    }
    for r in prime_factors(k as u64) {
        let e = (p as u128).pow((k as u64 / r) as u32);
        let xe = pow_poly(&x, e, m, p);
        let g = gcd(&sub(&xe, &x, p), m, p);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Whether `x` generates the multiplicative group of `F_p[x]/(m)`.
/// Assumes `m` irreducible.
pub(crate) fn is_primitive(m: &[u64], p: u64) -> bool {
    let k = deg(m).unwrap_or(0) as u32;
    let order = (p as u128).pow(k) - 1;
    if order > u64::MAX as u128 {
        return false;
    }
    let x = vec![0u64, 1];
    for r in prime_factors(order as u64) {
        let e = order / r as u128;
        if pow_poly(&x, e, m, p) == vec![1] {
            return false;
        }
    }
    true
}

/// The first monic polynomial of degree `k` (coefficients read as base-`p`
/// digits, constant term least significant) that is irreducible and, when
/// the group order is small enough to factor, primitive.
pub(crate) fn default_modulus(p: u64, k: usize) -> Vec<u64> {
    let q = (p as u128).pow(k as u32);
    let want_primitive = q <= 1u128 << 40;
    let mut code: u128 = 0;
    loop {
        let mut m = vec![0u64; k + 1];
        let mut c = code;
        for slot in m.iter_mut().take(k) {
            *slot = (c % p as u128) as u64;
            c /= p as u128;
        }
        m[k] = 1;
        if m[0] != 0 && is_irreducible(&m, p) && (!want_primitive || is_primitive(&m, p)) {
            return m;
        }
        code += 1;
    }
}
