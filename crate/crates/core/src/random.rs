//! Random graded posets for property tests.

use rand::Rng;

use crate::poset::GradedPoset;

/// `len` elements spread over ranks `0..=top`, each pair in consecutive ranks
/// joined by a cover with probability `density`.
pub fn random_graded_poset<R: Rng + ?Sized>(rng: &mut R, len: usize, top: usize, density: f64) -> GradedPoset {
    let mut ranks: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=top)).collect();
    ranks.sort_unstable();
    let mut covers = Vec::new();
    for x in 0..len {
        for y in 0..len {
            if ranks[y] == ranks[x] + 1 && rng.gen_bool(density) {
                covers.push((x, y));
            }
        }
    }
    GradedPoset::new(ranks, covers).expect("covers only join consecutive ranks")
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn produces_graded_posets() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let p = random_graded_poset(&mut rng, 10, 3, 0.4);
            assert_eq!(p.len(), 10);
            assert!(p.covers().iter().all(|&(a, b)| p.rank(a) + 1 == p.rank(b)));
        }
    }
}
