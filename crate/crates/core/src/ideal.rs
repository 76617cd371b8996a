//! Ideals of a finite commutative ring and the full ideal lattice.

use std::collections::{HashMap, VecDeque};

use crate::bitset::ElementSet;
use crate::error::IdealError;
use crate::ring::{Elem, FiniteRing};
use crate::Limits;

/// An ideal, stored by its member set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    members: ElementSet,
    generators: Vec<Elem>,
}

impl Ideal {
    /// Wraps a member set that the caller knows to be an ideal.
    pub fn from_members(members: ElementSet, generators: Vec<Elem>) -> Ideal {
        Ideal { members, generators }
    }

    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    /// A small generating set; one element when the ideal is principal.
    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.len() == self.members.width()
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// `<g1,g2,...>` using the ring's element labels.
    pub fn label(&self, r: &FiniteRing) -> String {
        let gens: Vec<&str> = self.generators.iter().map(|&g| r.label(g)).collect();
        format!("<{}>", gens.join(","))
    }
}

/// Smallest set containing `seeds` and closed under addition.
fn additive_closure(r: &FiniteRing, seeds: &[Elem]) -> ElementSet {
    let mut set = ElementSet::new(r.order());
    set.insert(r.zero());
    let mut queue = VecDeque::from([r.zero()]);
    let mut gens: Vec<Elem> = seeds.to_vec();
    gens.sort_unstable();
    gens.dedup();
    while let Some(s) = queue.pop_front() {
        for &g in &gens {
            let t = r.add(s, g);
            if !set.contains(t) {
                set.insert(t);
                queue.push_back(t);
            }
        }
    }
    set
}

/// `<a> = {r·a : r ∈ R}`.
pub fn principal_ideal(r: &FiniteRing, a: Elem) -> Ideal {
    let members = ElementSet::from_members(r.order(), r.elements().map(|x| r.mul(x, a)));
    Ideal { members, generators: vec![a] }
}

/// Ideal generated by a list of elements.
pub fn generated_ideal(r: &FiniteRing, gens: &[Elem]) -> Ideal {
    let mut acc = principal_ideal(r, r.zero());
    acc.generators.clear();
    for &g in gens {
        acc = ideal_sum(r, &acc, &principal_ideal(r, g));
    }
    acc.generators = gens.to_vec();
    acc
}

/// `I + J = {i + j}`.
pub fn ideal_sum(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    let mut members = ElementSet::new(r.order());
    for a in i.members.iter() {
        for b in j.members.iter() {
            members.insert(r.add(a, b));
        }
    }
    let mut generators = i.generators.clone();
    generators.extend(j.generators.iter().filter(|g| !i.generators.contains(g)));
    Ideal { members, generators }
}

/// `IJ`: the additive closure of all products `i·j`.
pub fn ideal_product(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Ideal {
    let products: Vec<Elem> = i
        .members
        .iter()
        .flat_map(|a| j.members.iter().map(move |b| r.mul(a, b)))
        .collect();
    let members = additive_closure(r, &products);
    Ideal { members, generators: Vec::new() }
}

/// True when `set` contains zero and is closed under addition and under
/// multiplication by arbitrary ring elements.
pub fn is_ideal(r: &FiniteRing, set: &ElementSet) -> bool {
    set.contains(r.zero())
        && set.iter().all(|a| {
            set.iter().all(|b| set.contains(r.add(a, b)))
                && r.elements().all(|x| set.contains(r.mul(x, a)))
        })
}

/// Proper and `ab ∈ I ⟹ a ∈ I ∨ b ∈ I`.
pub fn is_prime_ideal(r: &FiniteRing, i: &Ideal) -> bool {
    if i.is_whole() {
        return false;
    }
    let outside: Vec<Elem> = r.elements().filter(|&a| !i.contains(a)).collect();
    outside
        .iter()
        .enumerate()
        .all(|(k, &a)| outside[k..].iter().all(|&b| !i.contains(r.mul(a, b))))
}

/// Every ideal of a ring, sorted by `(size, members)`.
///
/// Index 0 is the zero ideal and the last index is the whole ring.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ideals: Vec<Ideal>,
    prime: Vec<bool>,
    maximal: Vec<bool>,
    principal: Vec<bool>,
    sum: Vec<usize>,
    principal_of: Vec<usize>,
    index: HashMap<ElementSet, usize>,
}

impl IdealLattice {
    pub fn enumerate(r: &FiniteRing) -> Result<IdealLattice, IdealError> {
        Self::enumerate_with(r, &Limits::default())
    }

    /// Seeds with every principal ideal and closes under pairwise sums.
    /// Every ideal is the sum of its principal subideals, so the fixpoint is
    /// the whole lattice.
    pub fn enumerate_with(r: &FiniteRing, limits: &Limits) -> Result<IdealLattice, IdealError> {
        let cap = limits.ideal_cap;
        let mut found: Vec<Ideal> = Vec::new();
        let mut seen: HashMap<ElementSet, usize> = HashMap::new();
        let mut principal_of_set: Vec<usize> = Vec::with_capacity(r.order());
        for a in r.elements() {
            let p = principal_ideal(r, a);
            let idx = *seen.entry(p.members.clone()).or_insert_with(|| {
                found.push(p);
                found.len() - 1
            });
            principal_of_set.push(idx);
        }
        if found.len() > cap {
            return Err(IdealError::IdealCap { cap });
        }
        let principal_count = found.len();
        let mut next = 0;
        while next < found.len() {
            for other in 0..next {
                let s = ideal_sum(r, &found[other], &found[next]);
                if !seen.contains_key(&s.members) {
                    seen.insert(s.members.clone(), found.len());
                    found.push(s);
                    if found.len() > cap {
                        return Err(IdealError::IdealCap { cap });
                    }
                }
            }
            next += 1;
        }

        // Canonical order and a principal generator where one exists.
        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| {
            found[a]
                .len()
                .cmp(&found[b].len())
                .then_with(|| found[a].members.cmp(&found[b].members))
        });
        let mut rank = vec![0; found.len()];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let principal_of: Vec<usize> = principal_of_set.iter().map(|&old| rank[old]).collect();
        let mut ideals: Vec<Ideal> = order.iter().map(|&old| found[old].clone()).collect();
        let mut principal = vec![false; ideals.len()];
        for (a, &idx) in principal_of.iter().enumerate() {
            if !principal[idx] {
                principal[idx] = true;
                ideals[idx].generators = vec![a];
            }
        }
        debug_assert_eq!(principal.iter().filter(|&&p| p).count(), principal_count);
        let index: HashMap<ElementSet, usize> =
            ideals.iter().enumerate().map(|(i, id)| (id.members.clone(), i)).collect();

        let k = ideals.len();
        let mut sum = vec![0; k * k];
        for i in 0..k {
            for j in i..k {
                let s = if ideals[i].is_subset(&ideals[j]) {
                    j
                } else if ideals[j].is_subset(&ideals[i]) {
                    i
                } else {
                    index[&ideal_sum(r, &ideals[i], &ideals[j]).members]
                };
                sum[i * k + j] = s;
                sum[j * k + i] = s;
            }
        }
        let prime = ideals.iter().map(|id| is_prime_ideal(r, id)).collect();
        let maximal = (0..k)
            .map(|i| {
                !ideals[i].is_whole()
                    && !ideals.iter().any(|j| {
                        !j.is_whole() && j.len() > ideals[i].len() && ideals[i].is_subset(j)
                    })
            })
            .collect();
        Ok(IdealLattice {
            ideals,
            prime,
            maximal,
            principal,
            sum,
            principal_of,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn ideal(&self, i: usize) -> &Ideal {
        &self.ideals[i]
    }

    pub fn zero_index(&self) -> usize {
        0
    }

    pub fn whole_index(&self) -> usize {
        self.ideals.len() - 1
    }

    /// Indices of the nonzero proper ideals.
    pub fn nontrivial_proper(&self) -> std::ops::Range<usize> {
        1..self.ideals.len().saturating_sub(1).max(1)
    }

    pub fn is_prime(&self, i: usize) -> bool {
        self.prime[i]
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        self.maximal[i]
    }

    pub fn is_principal(&self, i: usize) -> bool {
        self.principal[i]
    }

    pub fn prime_flags(&self) -> &[bool] {
        &self.prime
    }

    pub fn maximal_flags(&self) -> &[bool] {
        &self.maximal
    }

    pub fn maximal_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.maximal[i]).collect()
    }

    /// Index of `I_i + I_j`.
    pub fn sum(&self, i: usize, j: usize) -> usize {
        self.sum[i * self.len() + j]
    }

    /// Index of `<a>`.
    pub fn principal_index(&self, a: Elem) -> usize {
        self.principal_of[a]
    }

    pub fn index_of(&self, members: &ElementSet) -> Option<usize> {
        self.index.get(members).copied()
    }

    /// Index of the ideal generated by `gens`.
    pub fn generated_index(&self, gens: &[Elem]) -> usize {
        gens.iter()
            .fold(self.zero_index(), |acc, &g| self.sum(acc, self.principal_index(g)))
    }

    /// Index of `I_i · I_j`.
    pub fn product(&self, r: &FiniteRing, i: usize, j: usize) -> usize {
        let p = ideal_product(r, &self.ideals[i], &self.ideals[j]);
        self.index[&p.members]
    }

    pub fn label(&self, r: &FiniteRing, i: usize) -> String {
        self.ideals[i].label(r)
    }
}
