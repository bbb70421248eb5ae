use crate::exactq::Scalar;

/// Determinant over Q(q) by Gaussian elimination. The empty matrix has determinant 1.
pub fn determinant(mut m: Vec<Vec<Scalar>>) -> Scalar {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut det = Scalar::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Scalar::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det = &det * &p;
        let p_inv = p.inv().unwrap();
        for r in (col + 1)..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &p_inv;
            let (pivot_rows, rest) = m.split_at_mut(r);
            for (x, p) in rest[0][col..].iter_mut().zip(&pivot_rows[col][col..]) {
                *x = &*x - &(&factor * p);
            }
        }
    }
    det
}

/// All permutations of `0..n` with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    permute(&mut cur, 0, 1, &mut out);
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
    if k == cur.len() {
        out.push((cur.clone(), sign));
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, if i == k { sign } else { -sign }, out);
        cur.swap(k, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: i64) -> Scalar {
        Scalar::from_int(c)
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(vec![]), s(1));
        assert_eq!(determinant(vec![vec![s(0), s(1)], vec![s(1), s(0)]]), s(-1));
        let m = vec![
            vec![s(2), s(0), s(1)],
            vec![s(1), s(3), s(2)],
            vec![s(1), s(1), s(1)],
        ];
        // 2(3-2) - 0 + 1(1-3)
        assert_eq!(determinant(m), s(0));
    }

    #[test]
    fn permutation_signs_agree_with_leibniz() {
        let m: Vec<Vec<Scalar>> = (0..4)
            .map(|i| (0..4).map(|j| Scalar::q_pow(((i * 7 + j * 3) % 5) as i64) + s(i as i64 - j as i64)).collect())
            .collect();
        let leibniz: Scalar = permutations(4)
            .into_iter()
            .map(|(p, sign)| (0..4).fold(s(sign), |acc, i| acc * m[i][p[i]].clone()))
            .sum();
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(determinant(m), leibniz);
    }
}
