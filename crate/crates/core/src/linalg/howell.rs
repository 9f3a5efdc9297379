//! Howell normal form over `ZZ/n`.
//!
//! The Howell form is the echelon form whose pivots divide `n`, whose
//! entries above a pivot are reduced modulo it, and which is closed under
//! annihilator multiples: for every leading row, `(n / pivot) * row` lies in
//! the span of the rows below. The last property makes prefix-zero spans
//! (and therefore kernels of augmented systems) readable off the form.

fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, s, t)` with `s*a + t*b = g = gcd(a, b)` over the integers.
fn xgcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (r0, s0, t0)
}

fn inv_mod(a: u64, n: u64) -> u64 {
    let (g, s, _) = xgcd(a as i128, n as i128);
    debug_assert_eq!(g, 1);
    s.rem_euclid(n as i128) as u64
}

/// A unit `c` of `ZZ/n` with `c * a ≡ gcd(a, n) (mod n)`.
pub fn normalizing_unit(a: u64, n: u64) -> u64 {
    let a = a % n;
    if a == 0 {
        return 1;
    }
    let g = gcd(a, n);
    let n1 = n / g;
    let c0 = if n1 == 1 { 0 } else { inv_mod(a / g, n1) };
    let mut c = c0;
    while gcd(c, n) != 1 {
        c += n1;
    }
    c % n
}

#[inline]
fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

#[inline]
fn addmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 + b as u128) % n as u128) as u64
}

/// `target += c * src (mod n)`
fn axpy(target: &mut [u64], c: u64, src: &[u64], n: u64) {
    if c == 0 {
        return;
    }
    for (t, &s) in target.iter_mut().zip(src) {
        if s != 0 {
            *t = addmod(*t, mulmod(c, s, n), n);
        }
    }
}

/// Reduce to Howell form; zero rows are dropped. Returns the rows and
/// their pivot columns.
pub(crate) fn howell(mut rows: Vec<Vec<u64>>, ncols: usize, n: u64) -> (Vec<Vec<u64>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        for i in r + 1..rows.len() {
            let b = rows[i][c];
            if b == 0 {
                continue;
            }
            let a = rows[r][c];
            if a == 0 {
                rows.swap(r, i);
                continue;
            }
            let (g, s, t) = xgcd(a as i128, b as i128);
            let nn = n as i128;
            let s = s.rem_euclid(nn) as u64;
            let t = t.rem_euclid(nn) as u64;
            let u = (-(b as i128 / g)).rem_euclid(nn) as u64;
            let v = ((a as i128) / g).rem_euclid(nn) as u64;
            let top: Vec<u64> = rows[r]
                .iter()
                .zip(&rows[i])
                .map(|(&x, &y)| addmod(mulmod(s, x, n), mulmod(t, y, n), n))
                .collect();
            let bottom: Vec<u64> = rows[r]
                .iter()
                .zip(&rows[i])
                .map(|(&x, &y)| addmod(mulmod(u, x, n), mulmod(v, y, n), n))
                .collect();
            rows[r] = top;
            rows[i] = bottom;
        }
        if rows[r][c] == 0 {
            continue;
        }
        let unit = normalizing_unit(rows[r][c], n);
        for e in rows[r].iter_mut() {
            *e = mulmod(*e, unit, n);
        }
        let p = rows[r][c];
        let pivot_row = rows[r].clone();
        for row in rows[..r].iter_mut() {
            let q = row[c] / p;
            axpy(row, n - q % n, &pivot_row, n);
        }
        let ann = n / p;
        if ann != n {
            let extra: Vec<u64> = pivot_row.iter().map(|&x| mulmod(ann, x, n)).collect();
            if extra.iter().any(|&x| x != 0) {
                rows.push(extra);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalizing_unit_hits_gcd() {
        for n in 2..40u64 {
            for a in 0..n {
                let c = normalizing_unit(a, n);
                assert_eq!(gcd(c, n), 1);
                let g = if a == 0 { 0 } else { gcd(a, n) };
                assert_eq!(mulmod(c, a, n), g % n, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn howell_adds_annihilator_rows() {
        // [[2, 1]] over ZZ/4: 2*(2,1) = (0,2) must appear
        let (rows, pivots) = howell(vec![vec![2, 1]], 2, 4);
        assert_eq!(rows, vec![vec![2, 1], vec![0, 2]]);
        assert_eq!(pivots, vec![0, 1]);
    }
}
