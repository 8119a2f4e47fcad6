//! Slow, independent reference implementations on machine integers.

use std::collections::{BTreeMap, HashMap, HashSet};

pub type Mat = Vec<Vec<i128>>;

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i128)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, s) in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let flips = (p.len() - pos) as i32;
            out.push((q, if flips % 2 == 0 { s } else { -s }));
        }
    }
    out
}

/// Determinant by the Leibniz expansion.
pub fn leibniz_det(m: &Mat) -> i128 {
    let n = m.len();
    permutations(n)
        .into_iter()
        .map(|(p, s)| s * (0..n).map(|i| m[i][p[i]]).product::<i128>())
        .sum()
}

pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out.sort();
    out
}

pub fn minor(m: &Mat, rows: &[usize], cols: &[usize]) -> i128 {
    let sub: Mat = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| m[i][j]).collect())
        .collect();
    leibniz_det(&sub)
}

/// `k`-th compound by cofactor expansion of every minor.
pub fn compound(m: &Mat, k: usize) -> Mat {
    let n = m.len();
    let idx = subsets(n, k);
    idx.iter()
        .map(|r| idx.iter().map(|c| minor(m, r, c)).collect())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|t| row[t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

/// Invariant factors `D_k / D_{k-1}`, with `D_k` the gcd of all `k × k`
/// minors; the list stops at the rank.
pub fn invariant_factors(m: &Mat) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for r in subsets(rows, k) {
            for c in subsets(cols, k) {
                g = gcd(g, minor(m, &r, &c));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

/// `(free rank, torsion orders > 1)` of `Z^rows / im m`.
pub fn cokernel_shape(m: &Mat, rows: usize) -> (usize, Vec<i128>) {
    let f = invariant_factors(m);
    let torsion = f.iter().copied().filter(|&d| d > 1).collect();
    (rows - f.len(), torsion)
}

pub fn kernel_rank(m: &Mat) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    cols - invariant_factors(m).len()
}

fn factor(mut n: i128) -> Vec<(i128, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Invariant factor form of `⊕ Z/n_i` (`n_i = 0` meaning `Z`) by merging
/// elementary divisors prime by prime.
pub fn canonical(orders: &[i128]) -> (usize, Vec<i128>) {
    let rank = orders.iter().filter(|&&n| n == 0).count();
    let mut by_prime: BTreeMap<i128, Vec<i128>> = BTreeMap::new();
    for &n in orders.iter().filter(|&&n| n != 0) {
        for (p, e) in factor(n.abs()) {
            by_prime.entry(p).or_default().push(p.pow(e));
        }
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1i128; len];
    for powers in by_prime.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
        for (i, q) in powers.iter().enumerate() {
            factors[len - 1 - i] *= q;
        }
    }
    (rank, factors)
}

pub fn companion(lower: &[i64]) -> Mat {
    let d = lower.len();
    let mut m = vec![vec![0i128; d]; d];
    for i in 1..d {
        m[i][i - 1] = 1;
    }
    for (i, a) in lower.iter().enumerate() {
        m[i][d - 1] = -(*a as i128);
    }
    m
}

pub fn exterior_block(lower: &[i64], k: usize) -> Mat {
    let c = compound(&companion(lower), k);
    c.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| if i == j { 1 - x } else { -x })
                .collect()
        })
        .collect()
}

/// Kernel rank and cokernel orders (`0` for `Z`) of every block.
pub fn block_groups(lower: &[i64]) -> Vec<(usize, Vec<i128>)> {
    let d = lower.len();
    (0..=d)
        .map(|k| {
            let m = exterior_block(lower, k);
            let (rank, torsion) = cokernel_shape(&m, m.len());
            let mut orders = torsion;
            orders.extend(std::iter::repeat(0).take(rank));
            (kernel_rank(&m), orders)
        })
        .collect()
}

/// `(K_0, K_1)` as canonical shapes.
pub fn k_groups(lower: &[i64]) -> ((usize, Vec<i128>), (usize, Vec<i128>)) {
    let b = block_groups(lower);
    let d = lower.len();
    let mut k0 = Vec::new();
    let mut k1 = Vec::new();
    for (k, (ker, coker)) in b.iter().enumerate() {
        let zs = std::iter::repeat(0i128).take(*ker);
        if k % 2 == 1 {
            k0.extend(coker.iter().copied());
            k1.extend(zs);
        } else if k >= 2 {
            k1.extend(coker.iter().copied());
            k0.extend(zs);
        }
    }
    let _ = d;
    (canonical(&k0), canonical(&k1))
}

pub fn eval(coeffs: &[i128], x: i128) -> i128 {
    coeffs.iter().rev().fold(0, |acc, c| acc * x + c)
}

/// Whether the monic polynomial (low to high, leading 1 included) has a
/// monic integer factor of degree `1..=d/2`. Candidate factor coefficients
/// are bounded through the roots: every root has modulus at most
/// `R = 1 + max |a_i|`, so the `j`-th coefficient of a degree `m` factor is
/// at most `C(m, j) R^(m-j)` in absolute value.
pub fn reducible_by_enumeration(coeffs: &[i128]) -> bool {
    let d = coeffs.len() - 1;
    let r = 1 + coeffs[..d].iter().map(|c| c.abs()).max().unwrap_or(0);
    for m in 1..=d / 2 {
        let bounds: Vec<i128> = (0..m)
            .map(|j| binom(m, j) * r.pow((m - j) as u32))
            .collect();
        let mut g = vec![0i128; m + 1];
        g[m] = 1;
        if any_divisor(coeffs, &mut g, 0, &bounds) {
            return true;
        }
    }
    false
}

fn binom(n: usize, k: usize) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

fn any_divisor(f: &[i128], g: &mut Vec<i128>, pos: usize, bounds: &[i128]) -> bool {
    let m = g.len() - 1;
    if pos == m {
        return divides(g, f);
    }
    for x in -bounds[pos]..=bounds[pos] {
        g[pos] = x;
        if any_divisor(f, g, pos + 1, bounds) {
            return true;
        }
    }
    false
}

fn divides(g: &[i128], f: &[i128]) -> bool {
    let m = g.len() - 1;
    let mut r = f.to_vec();
    while r.len() > m {
        let lead = r.pop().unwrap();
        let shift = r.len() - m;
        for i in 0..m {
            r[shift + i] -= lead * g[i];
        }
    }
    r.iter().all(|&c| c == 0)
}

/// Number of real roots in `(lo, hi)` for a squarefree polynomial, by
/// scanning signs on a grid of step `1 / n`. `n` must exceed the inverse
/// root separation; values are exact since `n^d f(k/n)` is an integer.
pub fn roots_by_sign_scan(coeffs: &[i128], lo: i128, hi: i128, n: i128) -> usize {
    let d = coeffs.len() - 1;
    let scaled = |k: i128| -> i128 {
        coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * k.pow(i as u32) * n.pow((d - i) as u32))
            .sum()
    };
    let mut count = 0;
    let mut prev = scaled(lo * n).signum();
    for k in lo * n + 1..hi * n {
        let s = scaled(k).signum();
        if s == 0 {
            count += 1;
        } else if prev != 0 && s != prev {
            count += 1;
        }
        prev = s;
    }
    let last = scaled(hi * n).signum();
    if last != 0 && prev != 0 && last != prev {
        count += 1;
    }
    count
}

/// A grid fine enough for `roots_by_sign_scan`: the inverse of the
/// separation bound `sqrt(3) d^(-(d+2)/2) ||f||_2^(1-d)`, rounded up.
pub fn separation_grid(coeffs: &[i128]) -> i128 {
    let d = (coeffs.len() - 1) as f64;
    let norm = coeffs.iter().map(|&c| (c * c) as f64).sum::<f64>().sqrt();
    let sep = 3f64.sqrt() * d.powf(-(d + 2.0) / 2.0) * norm.powf(1.0 - d);
    (2.0 / sep).ceil() as i128
}

/// A finite abelian group `⊕ Z/d_i` with elements as coordinate vectors.
pub struct FiniteGroup {
    pub orders: Vec<u32>,
}

impl FiniteGroup {
    pub fn elements(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for &d in &self.orders {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..d).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    }

    fn add(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        a.iter()
            .zip(b)
            .zip(&self.orders)
            .map(|((x, y), d)| (x + y) % d)
            .collect()
    }

    fn scale(&self, a: &[u32], k: u32) -> Vec<u32> {
        a.iter()
            .zip(&self.orders)
            .map(|(x, d)| ((*x as u64 * k as u64) % *d as u64) as u32)
            .collect()
    }

    fn order_of(&self, a: &[u32]) -> u32 {
        a.iter()
            .zip(&self.orders)
            .map(|(x, d)| d / gcd(*x as i128, *d as i128) as u32)
            .fold(1, |acc, o| acc / gcd(acc as i128, o as i128) as u32 * o)
    }

    /// Product over generators of the number of admissible images.
    pub fn automorphism_search_size(&self) -> u64 {
        let elems = self.elements();
        self.orders
            .iter()
            .map(|&d| elems.iter().filter(|e| d % self.order_of(e) == 0).count() as u64)
            .product()
    }

    fn index_of(&self, x: &[u32]) -> usize {
        x.iter()
            .zip(&self.orders)
            .fold(0usize, |acc, (c, d)| acc * *d as usize + *c as usize)
    }

    /// Orbit labels of every element under the full automorphism group, by
    /// enumerating all endomorphisms and keeping the bijective ones.
    pub fn orbits_by_automorphisms(&self) -> HashMap<Vec<u32>, usize> {
        let elems = self.elements();
        let size = elems.len();
        let add: Vec<Vec<usize>> = elems
            .iter()
            .map(|x| elems.iter().map(|y| self.index_of(&self.add(x, y))).collect())
            .collect();
        let s = self.orders.len();
        // stride of generator j in the mixed-radix index
        let strides: Vec<usize> = (0..s)
            .map(|j| self.orders[j + 1..].iter().map(|&d| d as usize).product())
            .collect();
        let candidates: Vec<Vec<usize>> = self
            .orders
            .iter()
            .map(|&d| {
                (0..size)
                    .filter(|&i| d % self.order_of(&elems[i]) == 0)
                    .collect()
            })
            .collect();

        let mut autos: Vec<Vec<usize>> = Vec::new();
        let mut choice = vec![0usize; s];
        let mut image = vec![0usize; size];
        let mut seen = vec![false; size];
        loop {
            seen.iter_mut().for_each(|b| *b = false);
            let mut injective = true;
            for idx in 0..size {
                image[idx] = if idx == 0 {
                    0
                } else {
                    // step back along the last nonzero coordinate
                    let j = (0..s).rev().find(|&j| elems[idx][j] != 0).unwrap();
                    add[image[idx - strides[j]]][candidates[j][choice[j]]]
                };
                if seen[image[idx]] {
                    injective = false;
                    break;
                }
                seen[image[idx]] = true;
            }
            if injective {
                autos.push(image.clone());
            }
            let mut pos = 0;
            loop {
                if pos == s {
                    return Self::label_orbits(&elems, &autos);
                }
                choice[pos] += 1;
                if choice[pos] < candidates[pos].len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
        }
    }

    fn label_orbits(elems: &[Vec<u32>], autos: &[Vec<usize>]) -> HashMap<Vec<u32>, usize> {
        let mut label = vec![usize::MAX; elems.len()];
        let mut next = 0;
        for start in 0..elems.len() {
            if label[start] != usize::MAX {
                continue;
            }
            let mut stack = vec![start];
            label[start] = next;
            while let Some(y) = stack.pop() {
                for a in autos {
                    if label[a[y]] == usize::MAX {
                        label[a[y]] = next;
                        stack.push(a[y]);
                    }
                }
            }
            next += 1;
        }
        elems.iter().cloned().zip(label).collect()
    }

    /// Orbit labels from heights: two elements of a finite abelian group are
    /// automorphic iff, for every prime `p`, their `p`-components have the
    /// same height sequence `(h(x), h(px), h(p^2 x), …)`.
    pub fn orbits_by_heights(&self) -> HashMap<Vec<u32>, usize> {
        let elems = self.elements();
        let n: u32 = self.orders.iter().product();
        let primes: Vec<u32> = factor(n as i128).into_iter().map(|(p, _)| p as u32).collect();
        let mut invariants: HashMap<Vec<u32>, Vec<Vec<i64>>> = HashMap::new();
        let mut layers: HashMap<u32, Vec<HashSet<Vec<u32>>>> = HashMap::new();
        for &p in &primes {
            let mut sets = vec![elems.iter().cloned().collect::<HashSet<_>>()];
            loop {
                let next: HashSet<Vec<u32>> =
                    sets.last().unwrap().iter().map(|x| self.scale(x, p)).collect();
                if next.len() == sets.last().unwrap().len() {
                    break;
                }
                sets.push(next);
            }
            layers.insert(p, sets);
        }
        for x in &elems {
            let mut per_prime = Vec::new();
            for &p in &primes {
                let pe = p.pow(factor(n as i128).iter().find(|f| f.0 == p as i128).unwrap().1);
                let cofactor = n / pe;
                // p-component: a multiple of x by an integer ≡ 1 mod p^e, ≡ 0 mod n/p^e
                let u = (0..n).find(|&t| t % pe == 1 % pe && t % cofactor == 0).unwrap();
                let mut y = self.scale(x, u);
                let sets = &layers[&p];
                let mut seq = Vec::new();
                loop {
                    let h = if y.iter().all(|&c| c == 0) {
                        -1
                    } else {
                        sets.iter().rposition(|s| s.contains(&y)).unwrap() as i64
                    };
                    seq.push(h);
                    if h < 0 {
                        break;
                    }
                    y = self.scale(&y, p);
                }
                per_prime.push(seq);
            }
            invariants.insert(x.clone(), per_prime);
        }
        let mut ids: HashMap<Vec<Vec<i64>>, usize> = HashMap::new();
        elems
            .iter()
            .map(|x| {
                let len = ids.len();
                let id = *ids.entry(invariants[x].clone()).or_insert(len);
                (x.clone(), id)
            })
            .collect()
    }
}

/// All invariant-factor decompositions `d_1 | d_2 | … ` with product `n`.
pub fn groups_of_order(n: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, min: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 1 {
            out.push(acc.clone());
            return;
        }
        for d in min.max(2)..=rest {
            if rest % d == 0 && acc.last().is_none_or(|&last| d % last == 0) {
                // remaining factors must be multiples of d
                acc.push(d);
                go(rest / d, d, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(n, 2, &mut Vec::new(), &mut out);
    out
}

/// Whether two partitions of the same set agree.
pub fn same_partition<K: std::hash::Hash + Eq + Clone, A: std::hash::Hash + Eq + Clone, B: std::hash::Hash + Eq + Clone>(
    a: &HashMap<K, A>,
    b: &HashMap<K, B>,
) -> bool {
    let mut forward: HashMap<A, B> = HashMap::new();
    let mut backward: HashMap<B, A> = HashMap::new();
    a.iter().all(|(k, la)| {
        let Some(lb) = b.get(k) else { return false };
        forward.entry(la.clone()).or_insert_with(|| lb.clone()) == lb
            && backward.entry(lb.clone()).or_insert_with(|| la.clone()) == la
    }) && a.len() == b.len()
}
