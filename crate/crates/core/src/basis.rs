//! Cell identifiers and basis symbols `e(a;b)`.

use std::collections::HashMap;
use std::fmt;

/// Interned cell name. Ordering is declaration order in the owning
/// [`CellUniverse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(pub u32);

impl CellId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// The basis symbol `e(upper;lower)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisId {
    pub upper: CellId,
    pub lower: CellId,
}

impl BasisId {
    pub fn new(upper: CellId, lower: CellId) -> Self {
        BasisId { upper, lower }
    }

    /// `e(a;b) -> e(b;a)`.
    pub fn transpose(self) -> Self {
        BasisId {
            upper: self.lower,
            lower: self.upper,
        }
    }
}

/// Ordered, duplicate-free list of cell names.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CellUniverse {
    names: Vec<String>,
    lookup: HashMap<String, CellId>,
}

impl CellUniverse {
    pub fn new() -> Self {
        Self::default()
    }

    /// Interns `name`, returning the existing id if it is already present.
    pub fn intern(&mut self, name: &str) -> CellId {
        if let Some(&id) = self.lookup.get(name) {
            return id;
        }
        let id = CellId(self.names.len() as u32);
        self.names.push(name.to_string());
        self.lookup.insert(name.to_string(), id);
        id
    }

    pub fn get(&self, name: &str) -> Option<CellId> {
        self.lookup.get(name).copied()
    }

    pub fn name(&self, id: CellId) -> &str {
        &self.names[id.index()]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = CellId> + '_ {
        (0..self.names.len() as u32).map(CellId)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Renders `e(a;b)`. Ids outside this universe render as `#n`.
    pub fn render(&self, b: BasisId) -> String {
        let name = |c: CellId| {
            self.names
                .get(c.index())
                .cloned()
                .unwrap_or_else(|| format!("#{}", c.0))
        };
        format!("e({};{})", name(b.upper), name(b.lower))
    }

    /// Parses `e(a;b)` back into a basis id.
    pub fn parse_basis(&self, text: &str) -> Option<BasisId> {
        let inner = text.trim().strip_prefix("e(")?.strip_suffix(')')?;
        let (a, b) = inner.split_once(';')?;
        Some(BasisId::new(self.get(a)?, self.get(b)?))
    }
}

/// Borrowed view used for `Display` of basis ids.
pub struct Named<'a, T> {
    pub cells: &'a CellUniverse,
    pub value: T,
}

impl fmt::Display for Named<'_, BasisId> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cells.render(self.value))
    }
}
