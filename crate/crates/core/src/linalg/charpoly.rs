use crate::exactmath::RingElem;

/// Coefficients of `det(tI - A)`, lowest degree first, by Berkowitz's
/// division-free recurrence. Works over any commutative ring.
pub(crate) fn berkowitz<T: RingElem>(a: &[Vec<T>], one: &T) -> Vec<T> {
    let n = a.len();
    let zero = one.zero_like();
    if n == 0 {
        return vec![one.clone()];
    }
    // p holds coefficients highest degree first while iterating.
    let mut p = vec![one.clone(), a[n - 1][n - 1].neg()];
    for k in (0..n - 1).rev() {
        let m = n - 1 - k;
        let sub = |i: usize, j: usize| &a[k + 1 + i][k + 1 + j];

        let mut toeplitz = Vec::with_capacity(m + 2);
        toeplitz.push(one.clone());
        toeplitz.push(a[k][k].neg());
        let mut v: Vec<T> = (0..m).map(|i| a[k + 1 + i][k].clone()).collect();
        for step in 0..m {
            let rc = (0..m).fold(zero.clone(), |acc, i| {
                if a[k][k + 1 + i].is_zero() || v[i].is_zero() {
                    acc
                } else {
                    acc.add(&a[k][k + 1 + i].mul(&v[i]))
                }
            });
            toeplitz.push(rc.neg());
            if step + 1 < m {
                v = (0..m)
                    .map(|i| {
                        (0..m).fold(zero.clone(), |acc, j| {
                            if sub(i, j).is_zero() || v[j].is_zero() {
                                acc
                            } else {
                                acc.add(&sub(i, j).mul(&v[j]))
                            }
                        })
                    })
                    .collect();
            }
        }

        let mut next = Vec::with_capacity(m + 2);
        for i in 0..m + 2 {
            let mut acc = zero.clone();
            for j in 0..=i.min(m) {
                if !toeplitz[i - j].is_zero() && !p[j].is_zero() {
                    acc = acc.add(&toeplitz[i - j].mul(&p[j]));
                }
            }
            next.push(acc);
        }
        p = next;
    }
    p.reverse();
    p
}
