//! Pareto dominance and non-dominated sorting into layers.
//!
//! Maximization convention throughout. The sort uses the domination-count
//! scheme (each pair compared once, fronts peeled by decrementing counts);
//! the test suite holds it against a naive pairwise-peeling oracle.

/// True iff `u_i >= v_i` for all `i`. Panics on dimension mismatch.
pub fn weakly_dominates(u: &[u32], v: &[u32]) -> bool {
    assert_eq!(u.len(), v.len(), "dominance needs equal dimensions");
    u.iter().zip(v).all(|(a, b)| a >= b)
}

/// True iff `u` weakly dominates `v` and at least one inequality is strict.
pub fn dominates(u: &[u32], v: &[u32]) -> bool {
    weakly_dominates(u, v) && u != v
}

/// Result of non-dominated sorting: layer `i` (1-based rank) contains the
/// indices of the vectors dominated only by members of earlier layers.
#[derive(Debug, Clone)]
pub struct RankedPopulation {
    layers: Vec<Vec<usize>>,
    rank_of: Vec<usize>,
}

impl RankedPopulation {
    /// Layers in rank order; within a layer, indices keep input order.
    pub fn layers(&self) -> &[Vec<usize>] {
        &self.layers
    }

    /// 1-based rank of individual `i`.
    pub fn rank_of(&self, i: usize) -> usize {
        self.rank_of[i]
    }

    pub fn len(&self) -> usize {
        self.rank_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank_of.is_empty()
    }
}

/// Partitions `vectors` into non-dominated layers. Duplicated vectors share
/// a layer; empty input yields an empty partition.
pub fn non_dominated_sort<V: AsRef<[u32]>>(vectors: &[V]) -> RankedPopulation {
    let n = vectors.len();
    if n == 0 {
        return RankedPopulation { layers: Vec::new(), rank_of: Vec::new() };
    }
    let dim = vectors[0].as_ref().len();
    assert!(
        vectors.iter().all(|v| v.as_ref().len() == dim),
        "all vectors must share one dimension"
    );

    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut domination_count = vec![0usize; n];
    for i in 0..n {
        for j in (i + 1)..n {
            let (u, v) = (vectors[i].as_ref(), vectors[j].as_ref());
            if dominates(u, v) {
                dominated_by[i].push(j);
                domination_count[j] += 1;
            } else if dominates(v, u) {
                dominated_by[j].push(i);
                domination_count[i] += 1;
            }
        }
    }

    let mut layers: Vec<Vec<usize>> = Vec::new();
    let mut rank_of = vec![0usize; n];
    let mut current: Vec<usize> = (0..n).filter(|&i| domination_count[i] == 0).collect();
    let mut rank = 1;
    while !current.is_empty() {
        let mut next = Vec::new();
        for &i in &current {
            rank_of[i] = rank;
            for &j in &dominated_by[i] {
                domination_count[j] -= 1;
                if domination_count[j] == 0 {
                    next.push(j);
                }
            }
        }
        // Within-layer order is input order.
        next.sort_unstable();
        layers.push(std::mem::take(&mut current));
        current = next;
        rank += 1;
    }
    RankedPopulation { layers, rank_of }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ojzj::ObjectiveVector;
    use crate::rng::RandomStream;
    use proptest::prelude::*;

    fn ov(values: &[u32]) -> ObjectiveVector {
        ObjectiveVector(values.to_vec())
    }

    /// Independent oracle: repeatedly extract the set of vectors not
    /// dominated by any remaining vector.
    pub(crate) fn naive_peeling_sort(vectors: &[ObjectiveVector]) -> Vec<Vec<usize>> {
        let mut remaining: Vec<usize> = (0..vectors.len()).collect();
        let mut layers = Vec::new();
        while !remaining.is_empty() {
            let layer: Vec<usize> = remaining
                .iter()
                .copied()
                .filter(|&i| {
                    !remaining.iter().any(|&j| dominates(&vectors[j], &vectors[i]))
                })
                .collect();
            remaining.retain(|i| !layer.contains(i));
            layers.push(layer);
        }
        layers
    }

    #[test]
    fn weak_dominance_examples() {
        assert!(weakly_dominates(&[3, 3], &[3, 3]));
        assert!(weakly_dominates(&[4, 2], &[3, 2]));
        assert!(!weakly_dominates(&[4, 2], &[2, 4]));
    }

    #[test]
    fn strict_dominance_examples() {
        assert!(!dominates(&[3, 3], &[3, 3]));
        assert!(dominates(&[4, 3], &[3, 3]));
        assert!(!dominates(&[4, 2], &[2, 4]));
    }

    #[test]
    #[should_panic(expected = "equal dimensions")]
    fn dimension_mismatch_panics() {
        weakly_dominates(&[1, 2], &[1, 2, 3]);
    }

    #[test]
    fn sort_example_two_layers() {
        let vectors = [ov(&[3, 1]), ov(&[1, 3]), ov(&[2, 2]), ov(&[1, 1])];
        let ranked = non_dominated_sort(&vectors);
        assert_eq!(ranked.layers(), &[vec![0, 1, 2], vec![3]]);
        assert_eq!(ranked.rank_of(3), 2);
    }

    #[test]
    fn sort_singleton_and_duplicates() {
        let ranked = non_dominated_sort(&[ov(&[5, 5])]);
        assert_eq!(ranked.layers(), &[vec![0]]);
        let ranked = non_dominated_sort(&[ov(&[2, 2]), ov(&[2, 2])]);
        assert_eq!(ranked.layers(), &[vec![0, 1]]);
    }

    #[test]
    fn sort_empty_input() {
        let ranked = non_dominated_sort::<ObjectiveVector>(&[]);
        assert!(ranked.is_empty());
        assert!(ranked.layers().is_empty());
    }

    fn random_population(rng: &mut RandomStream, size: usize, m: usize, max: u32) -> Vec<ObjectiveVector> {
        (0..size)
            .map(|_| ObjectiveVector((0..m).map(|_| rng.index(max as usize + 1) as u32).collect()))
            .collect()
    }

    #[test]
    fn sort_matches_naive_oracle() {
        let mut rng = RandomStream::new(505);
        for round in 0..200 {
            let m = [2, 4, 6][round % 3];
            let size = 1 + rng.index(120);
            let pop = random_population(&mut rng, size, m, 20);
            let ranked = non_dominated_sort(&pop);
            assert_eq!(ranked.layers(), naive_peeling_sort(&pop).as_slice());
        }
    }

    #[test]
    fn rank_peeling_shifts_layers() {
        let mut rng = RandomStream::new(606);
        for _ in 0..50 {
            let pop = random_population(&mut rng, 60, 4, 10);
            let ranked = non_dominated_sort(&pop);
            if ranked.layers().len() < 2 {
                continue;
            }
            let survivors: Vec<usize> =
                ranked.layers()[1..].iter().flatten().copied().collect();
            let sub: Vec<ObjectiveVector> = survivors.iter().map(|&i| pop[i].clone()).collect();
            let resorted = non_dominated_sort(&sub);
            for (offset, layer) in resorted.layers().iter().enumerate() {
                let original: Vec<usize> = layer.iter().map(|&i| survivors[i]).collect();
                assert_eq!(original, ranked.layers()[offset + 1]);
            }
        }
    }

    proptest! {
        #[test]
        fn weak_dominance_is_reflexive_and_transitive(
            triple in proptest::collection::vec((0u32..10, 0u32..10, 0u32..10), 1..6),
        ) {
            let a: Vec<u32> = triple.iter().map(|t| t.0).collect();
            let b: Vec<u32> = triple.iter().map(|t| t.1).collect();
            let c: Vec<u32> = triple.iter().map(|t| t.2).collect();
            prop_assert!(weakly_dominates(&a, &a));
            if weakly_dominates(&a, &b) && weakly_dominates(&b, &c) {
                prop_assert!(weakly_dominates(&a, &c));
            }
        }

        #[test]
        fn strict_dominance_is_irreflexive_and_asymmetric(
            pair in proptest::collection::vec((0u32..10, 0u32..10), 1..6),
        ) {
            let a: Vec<u32> = pair.iter().map(|t| t.0).collect();
            let b: Vec<u32> = pair.iter().map(|t| t.1).collect();
            prop_assert!(!dominates(&a, &a));
            if dominates(&a, &b) {
                prop_assert!(!dominates(&b, &a));
            }
        }

        #[test]
        fn layers_partition_and_respect_dominance(
            raw in proptest::collection::vec(proptest::collection::vec(0u32..8, 3), 1..40),
        ) {
            let pop: Vec<ObjectiveVector> = raw.into_iter().map(ObjectiveVector).collect();
            let ranked = non_dominated_sort(&pop);
            let mut all: Vec<usize> = ranked.layers().iter().flatten().copied().collect();
            all.sort_unstable();
            prop_assert_eq!(all, (0..pop.len()).collect::<Vec<_>>());
            for (li, layer) in ranked.layers().iter().enumerate() {
                for &i in layer {
                    // Nothing in this or any later layer dominates i.
                    for later in &ranked.layers()[li..] {
                        for &j in later {
                            prop_assert!(!dominates(&pop[j], &pop[i]));
                        }
                    }
                    // Every non-first layer member is dominated from above.
                    if li > 0 {
                        let dominated = ranked.layers()[..li]
                            .iter()
                            .flatten()
                            .any(|&j| dominates(&pop[j], &pop[i]));
                        prop_assert!(dominated);
                    }
                }
            }
        }
    }
}
