//! Exact integer and rational helpers.

use num_rational::Ratio;

/// Exact rational number used by every bound evaluator.
pub type Rat = Ratio<i128>;

pub fn rat(n: i128, d: i128) -> Rat {
    Ratio::new(n, d)
}

/// Binomial coefficient with the usual convention `C(n, k) = 0` for `k < 0`
/// or `k > n`. Arguments are signed so shifted index arithmetic stays tidy.
pub fn binom(n: i64, k: i64) -> i128 {
    if k < 0 || k > n || n < 0 {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: i128 = 1;
    for i in 0..k {
        result = result * (n - i) as i128 / (i + 1) as i128;
    }
    result
}

/// The Macaulay expansion of `m` with respect to `k`:
/// `m = C(a_k, k) + C(a_{k-1}, k-1) + ... + C(a_i, i)` with
/// `a_k > a_{k-1} > ... > a_i >= i > 0`. Returns the pairs `(a_j, j)` from
/// `j = k` downward. Empty for `m = 0`.
pub fn macaulay_expansion(m: i128, k: u32) -> Vec<(i64, i64)> {
    assert!(m >= 0 && k >= 1);
    let mut rest = m;
    let mut j = k as i64;
    let mut terms = Vec::new();
    while rest > 0 && j >= 1 {
        // Largest a with C(a, j) <= rest.
        let mut a = j;
        while binom(a + 1, j) <= rest {
            a += 1;
        }
        terms.push((a, j));
        rest -= binom(a, j);
        j -= 1;
    }
    debug_assert_eq!(rest, 0, "Macaulay expansion did not terminate");
    terms
}

/// Upper pseudopower `m^<k>`: each `C(a_j, j)` becomes `C(a_j + 1, j + 1)`.
pub fn pseudopower_upper(m: i128, k: u32) -> i128 {
    macaulay_expansion(m, k)
        .iter()
        .map(|&(a, j)| binom(a + 1, j + 1))
        .sum()
}

/// Lower pseudopower `m_<k>`: each `C(a_j, j)` becomes `C(a_j - 1, j - 1)`.
pub fn pseudopower_lower(m: i128, k: u32) -> i128 {
    macaulay_expansion(m, k)
        .iter()
        .map(|&(a, j)| binom(a - 1, j - 1))
        .sum()
}
