//! Brute-force reference implementations over raw Cayley tables. Nothing in
//! here calls the algorithms under test; only table construction is shared.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use centra_core::verify::{corpus_specs, CorpusSpec};
use centra_core::FiniteGroup;

pub type Table = Vec<Vec<usize>>;

pub fn table_from_fn(n: usize, mul: impl Fn(usize, usize) -> usize) -> Table {
    (0..n).map(|a| (0..n).map(|b| mul(a, b)).collect()).collect()
}

pub fn identity(t: &Table) -> usize {
    (0..t.len())
        .find(|&e| (0..t.len()).all(|x| t[e][x] == x && t[x][e] == x))
        .unwrap()
}

pub fn commutes(t: &Table, a: usize, b: usize) -> bool {
    t[a][b] == t[b][a]
}

pub fn centralizer_mask(t: &Table, x: usize) -> Vec<bool> {
    (0..t.len()).map(|g| commutes(t, g, x)).collect()
}

pub fn center_mask(t: &Table) -> Vec<bool> {
    (0..t.len()).map(|z| (0..t.len()).all(|g| commutes(t, z, g))).collect()
}

/// Number of distinct centralizers, comparing every pair of centralizer masks.
pub fn cent_count_all_pairs(t: &Table) -> usize {
    let masks: Vec<Vec<bool>> = (0..t.len()).map(|x| centralizer_mask(t, x)).collect();
    let mut distinct = 0;
    for i in 0..masks.len() {
        if (0..i).all(|j| masks[j] != masks[i]) {
            distinct += 1;
        }
    }
    distinct
}

pub fn is_closed(t: &Table, members: &[usize]) -> bool {
    let set: BTreeSet<usize> = members.iter().copied().collect();
    members.iter().all(|&a| members.iter().all(|&b| set.contains(&t[a][b])))
}

/// Every subgroup as a sorted member list, by subset enumeration.
pub fn subgroups_by_subsets(t: &Table) -> Vec<Vec<usize>> {
    let n = t.len();
    assert!(n <= 16, "subset enumeration is limited to order 16");
    let e = identity(t);
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & (1 << e) == 0 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if is_closed(t, &members) {
            out.push(members);
        }
    }
    out
}

/// Largest set of pairwise non-commuting elements, by subset enumeration.
pub fn max_noncommuting_by_subsets(t: &Table) -> usize {
    let n = t.len();
    assert!(n <= 16);
    let mut best = 1;
    for mask in 1u32..(1 << n) {
        let k = mask.count_ones() as usize;
        if k <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let ok = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[i + 1..].iter().all(|&b| !commutes(t, a, b)));
        if ok {
            best = k;
        }
    }
    best
}

/// Closure of `gens` under multiplication.
pub fn closure(t: &Table, gens: &[usize]) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([identity(t)]);
    set.extend(gens.iter().copied());
    loop {
        let snapshot: Vec<usize> = set.iter().copied().collect();
        let before = set.len();
        for &a in &snapshot {
            for &b in &snapshot {
                set.insert(t[a][b]);
            }
        }
        if set.len() == before {
            return set;
        }
    }
}

pub fn inverse(t: &Table, a: usize) -> usize {
    let e = identity(t);
    (0..t.len()).find(|&b| t[a][b] == e).unwrap()
}

/// Sizes of the derived series, computed from commutator closures.
pub fn derived_sizes(t: &Table) -> Vec<usize> {
    let mut current: BTreeSet<usize> = (0..t.len()).collect();
    let mut sizes = vec![current.len()];
    loop {
        let mut comms = Vec::new();
        for &a in &current {
            for &b in &current {
                let ab = t[t[inverse(t, a)][inverse(t, b)]][t[a][b]];
                comms.push(ab);
            }
        }
        let next = closure(t, &comms);
        if next == current {
            return sizes;
        }
        sizes.push(next.len());
        current = next;
    }
}

pub fn order_of(t: &Table, x: usize) -> usize {
    let e = identity(t);
    let mut y = x;
    let mut k = 1;
    while y != e {
        y = t[y][x];
        k += 1;
    }
    k
}

pub fn order_histogram(t: &Table) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for x in 0..t.len() {
        *h.entry(order_of(t, x)).or_insert(0) += 1;
    }
    h
}

/// Isomorphism by trying every bijection that fixes the identity.
pub fn isomorphic_by_permutations(a: &Table, b: &Table) -> bool {
    let n = a.len();
    if n != b.len() {
        return false;
    }
    assert!(n <= 9);
    let (ea, eb) = (identity(a), identity(b));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[ea] = eb;
    used[eb] = true;
    fn extend(a: &Table, b: &Table, map: &mut [usize], used: &mut [bool], i: usize) -> bool {
        let n = a.len();
        if i == n {
            return (0..n).all(|x| (0..n).all(|y| map[a[x][y]] == b[map[x]][map[y]]));
        }
        if map[i] != usize::MAX {
            return extend(a, b, map, used, i + 1);
        }
        for v in 0..n {
            if !used[v] {
                map[i] = v;
                used[v] = true;
                if extend(a, b, map, used, i + 1) {
                    return true;
                }
                used[v] = false;
                map[i] = usize::MAX;
            }
        }
        false
    }
    extend(a, b, &mut map, &mut used, 0)
}

/// Permutation groups in test-local form: all permutations of `0..k` under
/// composition `(p*q)(i) = p(q(i))`.
pub fn symmetric_table(k: usize) -> Table {
    let mut perms: Vec<Vec<usize>> = Vec::new();
    fn rec(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..k {
            if !cur.contains(&v) {
                cur.push(v);
                rec(cur, k, out);
                cur.pop();
            }
        }
    }
    rec(&mut Vec::new(), k, &mut perms);
    let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).unwrap();
    table_from_fn(perms.len(), |a, b| {
        let c: Vec<usize> = (0..k).map(|i| perms[a][perms[b][i]]).collect();
        index(&c)
    })
}

/// Heisenberg group mod p with `(a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')`,
/// element `(a,b,c)` stored at `a + p*b + p*p*c`.
pub fn heisenberg_table(p: usize) -> Table {
    let split = |x: usize| (x % p, (x / p) % p, x / (p * p));
    table_from_fn(p * p * p, |x, y| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p)
    })
}

/// Dihedral group of order 2m as symmetries of an m-gon, `(i, s)` meaning
/// `x -> s*x + i` with s = ±1, stored at `i + m*[s = -1]`.
pub fn dihedral_table(m: usize) -> Table {
    table_from_fn(2 * m, |x, y| {
        let (i, s) = (x % m, x / m);
        let (j, t) = (y % m, y / m);
        let j_acted = if s == 1 { (m - j) % m } else { j };
        (i + j_acted) % m + m * (s ^ t)
    })
}

pub fn group(t: &Table) -> FiniteGroup {
    FiniteGroup::from_table(t).unwrap()
}

pub fn corpus_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    corpus_specs(&CorpusSpec::up_to(max_order))
        .unwrap()
        .into_iter()
        .map(|e| (e.to_string(), e.eval().unwrap()))
        .collect()
}
