//! Small number-theoretic helpers on machine words.

/// Prime factorization by trial division, or `None` if it would take more
/// than `budget` trial divisions.
pub(crate) fn factorize(mut n: u64, budget: u64) -> Option<Vec<(u64, u32)>> {
    let mut out = Vec::new();
    let mut p = 2u64;
    let mut spent = 0u64;
    while p.saturating_mul(p) <= n {
        spent += 1;
        if spent > budget {
            return None;
        }
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Some(out)
}

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

#[cfg(test)]
pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Inverse of `a` modulo `m`, assuming `gcd(a, m) = 1`.
pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    t0.rem_euclid(m as i128) as u64
}

fn primitive_root_mod_prime(p: u64, budget: u64) -> Option<u64> {
    if p == 2 {
        return Some(1);
    }
    let factors = factorize(p - 1, budget)?;
    (2..p).find(|&g| factors.iter().all(|&(r, _)| pow_mod(g, (p - 1) / r, p) != 1))
}

/// A generating set of the unit group of `Z/nZ`, built from primitive roots
/// of the prime-power parts and lifted through the Chinese remainder theorem.
pub(crate) fn unit_group_generators(n: u64, budget: u64) -> Option<Vec<u64>> {
    if n <= 2 {
        return Some(Vec::new());
    }
    let mut gens = Vec::new();
    for (p, e) in factorize(n, budget)? {
        let pe = p.pow(e);
        let rest = n / pe;
        let local: Vec<u64> = if p == 2 {
            match e {
                1 => vec![],
                2 => vec![3],
                _ => vec![pe - 1, 5],
            }
        } else {
            let g = primitive_root_mod_prime(p, budget)?;
            // g generates mod p^e unless g^(p-1) = 1 mod p^2
            let g = if e > 1 && pow_mod(g, p - 1, p * p) == 1 {
                g + p
            } else {
                g
            };
            vec![g]
        };
        for g in local {
            // x = g mod p^e, x = 1 mod rest
            let x = if rest == 1 {
                g % pe
            } else {
                let s = mul_mod(rest, inv_mod(rest % pe, pe), n);
                let t = (n + 1 - s) % n;
                (mul_mod(g % pe, s, n) + t) % n
            };
            gens.push(x);
        }
    }
    Some(gens)
}
