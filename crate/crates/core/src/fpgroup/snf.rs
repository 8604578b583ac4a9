//! Smith normal form of small integer matrices by unimodular row and column
//! operations.

/// Nonzero invariant factors d1 | d2 | ... of `m`, all positive.
///
/// Rows may have different lengths only if empty; a ragged input panics.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Vec<i64> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    assert!(m.iter().all(|r| r.len() == cols), "ragged matrix");
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();

    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        let Some((pr, pc)) = min_abs_nonzero(&a, t) else { break };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            // clear column t
            for i in t + 1..rows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    let pivot = a[t].clone();
                    for (x, p) in a[i][t..].iter_mut().zip(&pivot[t..]) {
                        *x -= q * p;
                    }
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
            }
            // clear row t
            for j in t + 1..cols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
            }
            if dirty {
                let (pr, pc) = min_abs_nonzero(&a, t).expect("pivot region is nonzero");
                a.swap(t, pr);
                for row in a.iter_mut() {
                    row.swap(t, pc);
                }
                continue;
            }
            // divisibility of the remaining block by the pivot
            let p = a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let src = a[i].clone();
                    for (x, v) in a[t][t..].iter_mut().zip(&src[t..]) {
                        *x += v;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs() as i64);
    }
    diag
}

fn min_abs_nonzero(a: &[Vec<i128>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(i128, usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, &v) in row.iter().enumerate().skip(t) {
            if v != 0 && best.is_none_or(|(b, _, _)| v.abs() < b) {
                best = Some((v.abs(), i, j));
            }
        }
    }
    best.map(|(_, i, j)| (i, j))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity() {
        assert_eq!(smith_normal_form(&[vec![1, 0], vec![0, 1]]), vec![1, 1]);
    }

    #[test]
    fn two_by_two() {
        // gcd of entries is 2, |det| = 8, so factors are (2, 4).
        assert_eq!(smith_normal_form(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
    }

    #[test]
    fn zero_and_empty() {
        assert!(smith_normal_form(&[vec![0, 0], vec![0, 0]]).is_empty());
        assert!(smith_normal_form(&[]).is_empty());
        assert!(smith_normal_form(&[vec![], vec![]]).is_empty());
    }

    #[test]
    fn needs_divisibility_fix() {
        // diag(2, 3) has Smith form (1, 6).
        assert_eq!(smith_normal_form(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn rectangular() {
        assert_eq!(smith_normal_form(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(smith_normal_form(&[vec![0, 2, 0]]), vec![2]);
    }
}
