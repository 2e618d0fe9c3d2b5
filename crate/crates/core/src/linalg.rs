//! Exact integer determinants.

/// Fraction-free Gaussian elimination (Bareiss). Returns `None` on overflow.
///
/// Every intermediate value is a minor of the input, so overflow only
/// happens when some minor genuinely exceeds `i128`.
pub fn det_bareiss(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    debug_assert!(m.iter().all(|r| r.len() == n));
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Some(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
        }
        prev = m[k][k];
    }
    m[n - 1][n - 1].checked_mul(sign)
}
