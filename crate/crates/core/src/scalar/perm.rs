/// Sign of the permutation sorting `idx`, or 0 if an index repeats.
pub fn levi_civita(idx: &[usize]) -> i32 {
    let mut v = idx.to_vec();
    let mut sign = 1;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return 0;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs() {
        assert_eq!(levi_civita(&[0, 1, 2, 3]), 1);
        assert_eq!(levi_civita(&[1, 0, 2, 3]), -1);
        assert_eq!(levi_civita(&[3, 2, 1, 0]), 1);
        assert_eq!(levi_civita(&[0, 0, 2, 3]), 0);
    }
}
