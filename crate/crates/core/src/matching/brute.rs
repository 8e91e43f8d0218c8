// Exhaustive maximum matching for small graphs, used as a test oracle.
// Dynamic program over vertex subsets: the lowest vertex of a subset is
// either left unmatched or matched to one of its neighbours in the subset.

use super::{Matching, MatchingError};
use crate::graph::Graph;

pub const BRUTE_FORCE_LIMIT: usize = 16;

fn table(g: &Graph) -> Result<(Vec<u8>, Vec<u32>), MatchingError> {
    let n = g.vertex_count();
    if n > BRUTE_FORCE_LIMIT {
        return Err(MatchingError::TooLargeForOracle {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let nbr: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect();
    let mut best = vec![0u8; 1 << n];
    for mask in 1u32..(1 << n) {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut value = best[rest as usize];
        let mut cand = nbr[v] & rest;
        while cand != 0 {
            let w = cand.trailing_zeros();
            cand &= cand - 1;
            value = value.max(1 + best[(rest & !(1 << w)) as usize]);
        }
        best[mask as usize] = value;
    }
    Ok((best, nbr))
}

/// `μ(g)` by exhaustive search. Fails above [`BRUTE_FORCE_LIMIT`] vertices.
pub fn brute_force_matching_number(g: &Graph) -> Result<usize, MatchingError> {
    let n = g.vertex_count();
    let (best, _) = table(g)?;
    Ok(best[(1usize << n) - 1] as usize)
}

pub fn brute_force_maximum_matching(g: &Graph) -> Result<Matching, MatchingError> {
    let n = g.vertex_count();
    let (best, nbr) = table(g)?;
    let mut mate = vec![None; n];
    let mut mask: u32 = ((1u64 << n) - 1) as u32;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let target = best[mask as usize];
        if best[rest as usize] == target {
            mask = rest;
            continue;
        }
        let mut cand = nbr[v] & rest;
        loop {
            let w = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let after = rest & !(1 << w);
            if 1 + best[after as usize] == target {
                mate[v] = Some(w);
                mate[w] = Some(v);
                mask = after;
                break;
            }
        }
    }
    Ok(Matching::from_mates(mate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, GeneratorConfig};

    #[test]
    fn examples() {
        assert_eq!(brute_force_matching_number(&Graph::empty(5)).unwrap(), 0);
        let k4 = generate(&GeneratorConfig::new(Family::Complete, 4)).unwrap();
        let m = brute_force_maximum_matching(&k4).unwrap();
        assert_eq!(m.size(), 2);
        assert!(m.is_valid_in(&k4));
    }

    #[test]
    fn guard() {
        assert!(matches!(
            brute_force_matching_number(&Graph::empty(17)),
            Err(MatchingError::TooLargeForOracle { n: 17, .. })
        ));
        let k16 = generate(&GeneratorConfig::new(Family::Complete, 16)).unwrap();
        assert_eq!(brute_force_maximum_matching(&k16).unwrap().size(), 8);
    }

    #[test]
    fn agrees_with_blossom_on_random_instance() {
        let g = generate(&GeneratorConfig::gnm(10, 20, 3)).unwrap();
        let oracle = brute_force_maximum_matching(&g).unwrap();
        assert!(oracle.is_valid_in(&g));
        assert_eq!(oracle.size(), super::super::maximum_matching(&g).size());
    }
}
