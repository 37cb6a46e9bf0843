//! Exact counting functions.

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    // each partial product is itself a binomial coefficient, so the division is exact
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / (n + 1)
}

/// (2n-1)!! = 1·3·5···(2n-1), with the empty product for n = 0.
pub fn odd_double_factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * (2 * k - 1))
}

/// Fuss-Catalan number C(4n+1, n) / (4n+1).
pub fn fuss_catalan_41(n: u64) -> BigUint {
    binomial(4 * n + 1, n) / (4 * n + 1)
}

/// Bell numbers via the Bell triangle.
pub fn bell(n: u64) -> BigUint {
    let mut row = vec![BigUint::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().unwrap_or_else(BigUint::one));
        for x in &row {
            let v = next.last().unwrap() + x;
            next.push(v);
        }
        row = next;
    }
    row[0].clone()
}

pub fn pow(base: u64, exp: u64) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// Stirling numbers of the second kind S(n, k).
pub fn stirling2(n: u64, k: u64) -> BigUint {
    let mut table = vec![vec![BigUint::zero(); k as usize + 1]; n as usize + 1];
    table[0][0] = BigUint::one();
    for i in 1..=n as usize {
        for j in 1..=(k as usize).min(i) {
            table[i][j] = &table[i - 1][j] * BigUint::from(j) + &table[i - 1][j - 1];
        }
    }
    table[n as usize][k as usize].clone()
}

/// Σ_k C(n,k)² k! f(k): the rook-type sums, where k counts through lines.
pub fn rook_sum(n: u64, f: impl Fn(u64) -> BigUint) -> BigUint {
    (0..=n)
        .map(|k| {
            let c = binomial(n, k);
            &c * &c * factorial(k) * f(k)
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn standard_values() {
        assert_eq!(catalan(5), u(42));
        assert_eq!(bell(8), u(4140));
        assert_eq!(fuss_catalan_41(3), u(22));
        assert_eq!(fuss_catalan_41(2), u(4));
        assert_eq!(odd_double_factorial(4), u(105));
        assert_eq!(binomial(13, 3), u(286));
        assert_eq!(binomial(3, 5), u(0));
        assert_eq!(stirling2(4, 2), u(7));
    }

    #[test]
    fn small_sequences() {
        let cat: Vec<_> = (0..8).map(catalan).collect();
        assert_eq!(cat, [1u64, 1, 2, 5, 14, 42, 132, 429].map(u));
        let b: Vec<_> = (0..8).map(bell).collect();
        assert_eq!(b, [1u64, 1, 2, 5, 15, 52, 203, 877].map(u));
    }

    #[test]
    fn bell_is_sum_of_stirling() {
        for n in 0..10 {
            let s: BigUint = (0..=n).map(|k| stirling2(n, k)).sum();
            assert_eq!(s, bell(n));
        }
    }
}
