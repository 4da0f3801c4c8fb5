//! Smith normal form over the integers (diagonal only).

/// Invariant factors of an integer matrix, in divisibility order, padded with
/// zeros to `min(rows, cols)`.
pub fn invariant_factors(mut m: Vec<Vec<i128>>) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let n = rows.min(cols);
    let mut diag = Vec::with_capacity(n);
    for t in 0..n {
        // Pivot: smallest nonzero absolute value in the trailing block.
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| m[i][j] != 0)
            .min_by_key(|&(i, j)| m[i][j].abs());
        let Some((pi, pj)) = pivot else {
            diag.resize(n, 0);
            break;
        };
        m.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..rows {
                let q = m[i][t].div_euclid(m[t][t]);
                if q != 0 {
                    for j in t..cols {
                        m[i][j] -= q * m[t][j];
                    }
                }
                if m[i][t] != 0 {
                    done = false;
                }
            }
            for j in t + 1..cols {
                let q = m[t][j].div_euclid(m[t][t]);
                if q != 0 {
                    for row in m.iter_mut().skip(t) {
                        row[j] -= q * row[t];
                    }
                }
                if m[t][j] != 0 {
                    done = false;
                }
            }
            if done {
                // Divisibility: fold any trailing entry not divisible by the pivot back in.
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| m[i][j] % m[t][t] != 0);
                match bad {
                    Some((i, _)) => {
                        for j in t..cols {
                            let v = m[i][j];
                            m[t][j] += v;
                        }
                        continue;
                    }
                    None => break,
                }
            }
            // Move the smallest nonzero entry of row/column t to the pivot.
            let best_r = (t..rows).filter(|&i| m[i][t] != 0).min_by_key(|&i| m[i][t].abs());
            let best_c = (t..cols).filter(|&j| m[t][j] != 0).min_by_key(|&j| m[t][j].abs());
            match (best_r, best_c) {
                (Some(i), Some(j)) if m[i][t].abs() <= m[t][j].abs() => m.swap(t, i),
                (_, Some(j)) => {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                }
                (Some(i), None) => m.swap(t, i),
                (None, None) => unreachable!("pivot is nonzero"),
            }
        }
        diag.push(m[t][t].abs());
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_examples() {
        assert_eq!(invariant_factors(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(invariant_factors(vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), vec![2, 6, 12]);
        assert_eq!(invariant_factors(vec![vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(invariant_factors(vec![vec![4], vec![6]]), vec![2]);
    }

    #[test]
    fn determinant_is_preserved() {
        let m = vec![vec![3, 1, 4], vec![1, 5, 9], vec![2, 6, 5]];
        // det = -90
        let d: i128 = invariant_factors(m).iter().product();
        assert_eq!(d, 90);
    }
}
