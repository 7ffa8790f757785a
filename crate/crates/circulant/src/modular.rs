//! Modular arithmetic on connection sets: units of `Z_n` and the
//! multiplier action they induce.

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Units of `Z_n` (residues coprime to `n`), ascending.
pub fn units(n: usize) -> Vec<usize> {
    (1..n).filter(|&a| gcd(a, n) == 1).collect()
}

/// The image `a * set` mod `n`, sorted ascending.
pub fn multiply_set(n: usize, set: &[usize], a: usize) -> Vec<usize> {
    let mut image: Vec<usize> = set.iter().map(|&s| (a * s) % n).collect();
    image.sort_unstable();
    image
}

/// Lexicographically least image of `set` under all units of `Z_n`. This
/// is the canonical representative of the set's multiplier class;
/// applying it twice returns the same set.
pub fn least_multiplier_image(n: usize, set: &[usize]) -> Vec<usize> {
    units(n)
        .into_iter()
        .map(|a| multiply_set(n, set, a))
        .min()
        .expect("1 is always a unit")
}
