//! Small enumeration helpers.

/// All perfect matchings of `0..n` (`n` even), each as pairs `(i, j)` with
/// `i < j`, ordered by first element. There are `(n-1)!!` of them.
pub fn perfect_matchings(n: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(cur.clone());
            return;
        }
        let first = free.remove(0);
        for k in 0..free.len() {
            let other = free.remove(k);
            cur.push((first, other));
            go(free, cur, out);
            cur.pop();
            free.insert(k, other);
        }
        free.insert(0, first);
    }
    assert!(n.is_multiple_of(2), "matchings need an even number of points");
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), &mut out);
    out
}

/// `(2k-1)!!`, with `(-1)!! = 1`.
pub fn double_factorial_odd(k: usize) -> u64 {
    (1..=k as u64).map(|i| 2 * i - 1).product()
}
