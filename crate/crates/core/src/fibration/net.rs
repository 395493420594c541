//! Search for `(k, d)`-nets: partitions of the `n = k * d` arrangement
//! lines into `k` classes of `d` lines each, such that every lattice point
//! joining two different classes lies on exactly one line of every class.

use crate::arrangement::{Arrangement, Lattice};
use crate::exec;

/// A `(k, d)`-net on an arrangement.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Net {
    pub k: usize,
    pub d: usize,
    /// The classes, each sorted, ordered by their smallest line index.
    pub classes: Vec<Vec<usize>>,
    /// Lattice points lying on one line of every class, in lattice order.
    pub inter_points: Vec<usize>,
    /// Lattice points all of whose lines belong to a single class.
    pub intra_points: Vec<usize>,
}

/// Checks the net axioms for a candidate class partition, classifying every
/// lattice point.  Returns the (inter, intra) point lists on success.
///
/// This re-derives everything from the lattice, independently of the
/// incremental pruning used during the search.
pub fn verify_net(
    arr: &Arrangement,
    lat: &Lattice,
    classes: &[Vec<usize>],
) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = arr.n_lines();
    let k = classes.len();
    if k < 3 {
        return None;
    }
    let mut class_of = vec![usize::MAX; n];
    let mut seen = 0usize;
    for (c, class) in classes.iter().enumerate() {
        if c > 0 && classes[c - 1].len() != class.len() {
            return None;
        }
        for &li in class {
            if li >= n || class_of[li] != usize::MAX {
                return None;
            }
            class_of[li] = c;
            seen += 1;
        }
    }
    if seen != n {
        return None;
    }
    let mut inter = Vec::new();
    let mut intra = Vec::new();
    for (pi, p) in lat.points().iter().enumerate() {
        let mut counts = vec![0usize; k];
        for &li in &p.lines {
            counts[class_of[li]] += 1;
        }
        let distinct = counts.iter().filter(|&&c| c > 0).count();
        if distinct == 1 {
            intra.push(pi);
        } else if counts.iter().all(|&c| c == 1) {
            inter.push(pi);
        } else {
            return None;
        }
    }
    Some((inter, intra))
}

/// Finds every `(k, n/k)`-net on the arrangement.
///
/// Returns an empty list unless `3 <= k < n` and `k` divides `n`.  The
/// result is sorted by class partition; each returned net has been checked
/// against the lattice by [`verify_net`].
pub fn net_search(arr: &Arrangement, lat: &Lattice, k: usize) -> Vec<Net> {
    let n = arr.n_lines();
    if k < 3 || k >= n || !n.is_multiple_of(k) {
        return Vec::new();
    }
    let d = n / k;
    let root = PartialAssignment {
        class_of: vec![usize::MAX; n],
        sizes: vec![0; k],
        used: 0,
        depth: 0,
    };
    // Enumerate a first batch of consistent prefixes sequentially, then
    // complete each prefix independently.
    let split_depth = n.min(4);
    let mut prefixes = Vec::new();
    collect_prefixes(lat, k, d, root, split_depth, &mut prefixes);
    let mut nets: Vec<Net> = exec::flat_map_collect(prefixes, |prefix| {
        let mut done = Vec::new();
        complete(lat, k, d, prefix, n, &mut done);
        done.into_iter()
            .filter_map(|class_of| {
                let classes = classes_from(&class_of, k);
                verify_net(arr, lat, &classes).map(|(inter, intra)| Net {
                    k,
                    d,
                    classes,
                    inter_points: inter,
                    intra_points: intra,
                })
            })
            .collect()
    });
    nets.sort();
    nets
}

/// Nets for every admissible class count, in increasing `k` order.
pub fn all_nets(arr: &Arrangement, lat: &Lattice) -> Vec<Net> {
    let n = arr.n_lines();
    let mut out = Vec::new();
    for k in 3..n {
        if n.is_multiple_of(k) {
            out.extend(net_search(arr, lat, k));
        }
    }
    out
}

#[derive(Clone)]
struct PartialAssignment {
    class_of: Vec<usize>,
    sizes: Vec<usize>,
    used: usize,
    depth: usize,
}

fn classes_from(class_of: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); k];
    for (li, &c) in class_of.iter().enumerate() {
        classes[c].push(li);
    }
    classes
}

/// Lines are assigned in index order; a line may open class `c` only if all
/// classes below `c` are already open, so each unlabeled partition is
/// produced exactly once, with classes ordered by smallest member.
fn candidate_classes(state: &PartialAssignment, k: usize, d: usize) -> Vec<usize> {
    let top = state.used.min(k - 1);
    (0..=top).filter(|&c| state.sizes[c] < d).collect()
}

/// A point stays admissible while it can still become intra (all assigned
/// lines in one class) or inter (one line per class, so its multiplicity
/// must be exactly `k`).
fn point_admissible(lat: &Lattice, k: usize, state: &PartialAssignment, line: usize) -> bool {
    for &pi in lat.points_on_line(line) {
        let p = &lat.points()[pi];
        let mut first = usize::MAX;
        let mut mixed = false;
        let mut repeated = false;
        let mut counts = vec![0usize; k];
        for &li in &p.lines {
            let c = state.class_of[li];
            if c == usize::MAX {
                continue;
            }
            counts[c] += 1;
            if counts[c] > 1 {
                repeated = true;
            }
            if first == usize::MAX {
                first = c;
            } else if c != first {
                mixed = true;
            }
        }
        if mixed && (repeated || p.multiplicity() != k) {
            return false;
        }
    }
    true
}

fn collect_prefixes(
    lat: &Lattice,
    k: usize,
    d: usize,
    state: PartialAssignment,
    split_depth: usize,
    out: &mut Vec<PartialAssignment>,
) {
    if state.depth == split_depth {
        out.push(state);
        return;
    }
    for c in candidate_classes(&state, k, d) {
        let mut next = state.clone();
        next.class_of[next.depth] = c;
        next.sizes[c] += 1;
        next.used = next.used.max(c + 1);
        next.depth += 1;
        if point_admissible(lat, k, &next, next.depth - 1) {
            collect_prefixes(lat, k, d, next, split_depth, out);
        }
    }
}

fn complete(
    lat: &Lattice,
    k: usize,
    d: usize,
    state: PartialAssignment,
    n: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if state.depth == n {
        if state.used == k {
            out.push(state.class_of);
        }
        return;
    }
    for c in candidate_classes(&state, k, d) {
        let mut next = state.clone();
        next.class_of[next.depth] = c;
        next.sizes[c] += 1;
        next.used = next.used.max(c + 1);
        next.depth += 1;
        if point_admissible(lat, k, &next, next.depth - 1) {
            complete(lat, k, d, next, n, out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::{builtin_arrangement, compute_lattice};

    fn setup(name: &str) -> (Arrangement, Lattice) {
        let arr = builtin_arrangement(name).unwrap();
        let lat = compute_lattice(&arr);
        (arr, lat)
    }

    #[test]
    fn ceva_has_exactly_one_pair_net() {
        let (arr, lat) = setup("ceva6");
        let nets = net_search(&arr, &lat, 3);
        assert_eq!(nets.len(), 1);
        let net = &nets[0];
        assert_eq!(net.d, 2);
        assert_eq!(net.classes, vec![vec![0, 4], vec![1, 5], vec![2, 3]]);
        assert_eq!(net.inter_points.len(), 4);
        assert_eq!(net.intra_points.len(), 3);
        for &pi in &net.inter_points {
            assert_eq!(lat.points()[pi].multiplicity(), 3);
        }
        for &pi in &net.intra_points {
            assert_eq!(lat.points()[pi].multiplicity(), 2);
        }
    }

    /// Brute force over all fifteen ways of splitting six lines into three
    /// pairs, independently of the backtracking search.
    #[test]
    fn ceva_pair_net_matches_exhaustive_pairings() {
        let (arr, lat) = setup("ceva6");
        let mut tried = 0;
        let mut valid = Vec::new();
        for b in 1..6 {
            // pair line 0 with b; pair the smallest leftover with one of the
            // other three; the final two lines form the last pair
            let rest: Vec<usize> = (1..6).filter(|&x| x != b).collect();
            for j in 1..4 {
                let second = vec![rest[0], rest[j]];
                let third: Vec<usize> = rest[1..]
                    .iter()
                    .copied()
                    .filter(|&x| x != rest[j])
                    .collect();
                let classes = vec![vec![0, b], second, third];
                tried += 1;
                if verify_net(&arr, &lat, &classes).is_some() {
                    valid.push(classes);
                }
            }
        }
        assert_eq!(tried, 15);
        assert_eq!(valid.len(), 1);
        assert_eq!(valid[0], vec![vec![0, 4], vec![1, 5], vec![2, 3]]);
    }

    #[test]
    fn inadmissible_class_counts_yield_no_nets() {
        let (arr, lat) = setup("ceva6");
        assert!(net_search(&arr, &lat, 2).is_empty(), "k below three");
        assert!(net_search(&arr, &lat, 4).is_empty(), "k must divide n");
        assert!(net_search(&arr, &lat, 6).is_empty(), "k must be below n");
    }

    #[test]
    fn dual_hesse_has_four_triple_nets() {
        let (arr, lat) = setup("dualhesse9");
        let nets = net_search(&arr, &lat, 3);
        assert_eq!(nets.len(), 4);
        for net in &nets {
            assert_eq!(net.d, 3);
            assert_eq!(net.inter_points.len(), 9);
            assert_eq!(net.intra_points.len(), 3);
            // each class consists of three concurrent lines: its lines are
            // exactly the lines of one of the (fully intra) lattice points
            for class in &net.classes {
                assert!(net
                    .intra_points
                    .iter()
                    .any(|&pi| lat.points()[pi].lines == *class));
            }
        }
        assert_eq!(all_nets(&arr, &lat).len(), 4);
    }

    #[test]
    fn hesse_net_is_the_four_triangles() {
        let (arr, lat) = setup("hesse12");
        assert!(net_search(&arr, &lat, 3).is_empty());
        assert!(net_search(&arr, &lat, 6).is_empty());
        let nets = net_search(&arr, &lat, 4);
        assert_eq!(nets.len(), 1);
        let net = &nets[0];
        assert_eq!(net.d, 3);
        assert_eq!(
            net.classes,
            vec![vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8], vec![9, 10, 11]]
        );
        assert_eq!(net.inter_points.len(), 9);
        assert_eq!(net.intra_points.len(), 12);
        for &pi in &net.inter_points {
            assert_eq!(lat.points()[pi].multiplicity(), 4);
        }
        assert_eq!(all_nets(&arr, &lat), nets);
    }

    #[test]
    fn verify_net_rejects_bad_partitions() {
        let (arr, lat) = setup("ceva6");
        // unequal class sizes
        assert!(verify_net(&arr, &lat, &[vec![0], vec![1, 5], vec![2, 3, 4]]).is_none());
        // a mixed double point (lines 0 and 1 meet lines 2..5 at triple points)
        assert!(verify_net(&arr, &lat, &[vec![0, 1], vec![2, 4], vec![3, 5]]).is_none());
        // missing line
        assert!(verify_net(&arr, &lat, &[vec![0, 4], vec![1, 5], vec![2, 2]]).is_none());
        // fewer than three classes
        assert!(verify_net(&arr, &lat, &[vec![0, 1, 2], vec![3, 4, 5]]).is_none());
    }
}
