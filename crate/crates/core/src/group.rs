//! Dense Cayley-table groups.

use std::fmt;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{GroupError, Result};

/// Default upper bound on group order. A 4096-element table of `u16` is 32 MiB.
pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Above this order, user-supplied tables are checked with Light's test over a
/// generating set instead of the full cubic scan.
pub const FULL_ASSOCIATIVITY_MAX: usize = 512;

/// Set this environment variable to force the associativity check on groups
/// built by the family constructors, which otherwise trust their construction.
pub const CHECK_ASSOC_ENV: &str = "CENTRA_CHECK_ASSOC";

/// A finite group given by its multiplication table.
///
/// Elements are the indices `0..order`. `table[a * order + b]` is the product
/// `a·b` (row is the left factor). Groups are immutable once built.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u16>,
    identity: u16,
    inverses: Vec<u16>,
}

#[derive(Serialize)]
struct GroupDump<'a> {
    name: &'a str,
    order: usize,
    table: &'a [u16],
    identity: u16,
}

impl FiniteGroup {
    /// Validates a user-supplied multiplication table and discovers the
    /// identity and inverses.
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self> {
        Self::from_table_with_cap(rows, DEFAULT_ORDER_CAP)
    }

    pub fn from_table_with_cap(rows: &[Vec<usize>], cap: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::MalformedTable("empty table".into()));
        }
        if n > cap || n > u16::MAX as usize + 1 {
            return Err(GroupError::ExceedsCap { order: n as u64, cap });
        }
        let mut table = Vec::with_capacity(n * n);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(GroupError::MalformedTable(format!(
                    "row {i} has length {}, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(GroupError::MalformedTable(format!(
                        "entry ({i},{j}) = {v} out of range"
                    )));
                }
                table.push(v as u16);
            }
        }

        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .ok_or(GroupError::NoIdentity)?;

        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a * n + b] as usize == identity && table[b * n + a] as usize == identity)
                .ok_or(GroupError::NoInverse { element: a })?;
            inverses.push(inv as u16);
        }

        let group = FiniteGroup {
            name: format!("table{n}"),
            order: n,
            table,
            identity: identity as u16,
            inverses,
        };
        if n <= FULL_ASSOCIATIVITY_MAX {
            group.check_associativity_full()?;
        } else {
            group.check_associativity_light()?;
        }
        Ok(group)
    }

    /// Builds a group from a multiplication function that is associative by
    /// construction. `mul` receives element indices.
    pub(crate) fn from_fn<F>(name: String, order: usize, identity: usize, cap: usize, mul: F) -> Result<Self>
    where
        F: Fn(usize, usize) -> usize,
    {
        if order > cap || order > u16::MAX as usize + 1 {
            return Err(GroupError::ExceedsCap {
                order: order as u64,
                cap,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                table.push(mul(a, b) as u16);
            }
        }
        let mut inverses = vec![0u16; order];
        for (a, inv) in inverses.iter_mut().enumerate() {
            let row = &table[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&v| v as usize == identity)
                .ok_or(GroupError::NoInverse { element: a })?;
            *inv = b as u16;
        }
        let group = FiniteGroup {
            name,
            order,
            table,
            identity: identity as u16,
            inverses,
        };
        if std::env::var_os(CHECK_ASSOC_ENV).is_some() {
            group.check_associativity_full()?;
        }
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    #[inline]
    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.table[a * self.order + b] == self.table[b * self.order + a]
    }

    /// `g·x·g⁻¹`
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a⁻¹·b⁻¹·a·b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let left = self.mul(self.inv(a), self.inv(b));
        self.mul(left, self.mul(a, b))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn check_element(&self, x: usize) -> Result<()> {
        if x < self.order {
            Ok(())
        } else {
            Err(GroupError::OutOfRange {
                element: x,
                order: self.order,
            })
        }
    }

    pub fn element_order(&self, x: usize) -> usize {
        let e = self.identity();
        let mut k = 1;
        let mut p = x;
        while p != e {
            p = self.mul(p, x);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.commute(a, b)))
    }

    /// Maximum element order's lcm, i.e. the smallest `e` with `x^e = 1` for all `x`.
    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|x| self.element_order(x))
            .fold(1, |acc, o| acc / gcd(acc, o) * o)
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|row| row.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Debug dump `{name, order, table, identity}` with a row-major table.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&GroupDump {
            name: &self.name,
            order: self.order,
            table: &self.table,
            identity: self.identity,
        })
        .expect("group dump serializes")
    }

    pub fn check_associativity_full(&self) -> Result<()> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    /// Light's test: associativity holds everywhere iff `(x·g)·y = x·(g·y)` for
    /// every `g` in a generating set.
    pub fn check_associativity_light(&self) -> Result<()> {
        let mut reached = ElementSet::from_indices(self.order, [self.identity()]);
        let mut gens = Vec::new();
        // Left-normed products of the chosen generators; if they reach every
        // element the generators certainly generate the magma.
        while let Some(g) = reached.complement().first() {
            gens.push(g);
            let mut frontier: Vec<usize> = reached.iter().collect();
            while let Some(x) = frontier.pop() {
                for &h in &gens {
                    let y = self.mul(x, h);
                    if reached.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        for &g in &gens {
            for x in self.elements() {
                let xg = self.mul(x, g);
                for y in self.elements() {
                    if self.mul(xg, y) != self.mul(x, self.mul(g, y)) {
                        return Err(GroupError::NotAssociative { a: x, b: g, c: y });
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

pub(crate) fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
