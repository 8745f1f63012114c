use std::collections::BTreeMap;
use std::fmt;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::exact_math::Rational;

/// One coordinate value in a parameter binding.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Param {
    Int(i64),
    Rat(Rational),
}

impl Serialize for Param {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Param::Int(v) => serializer.serialize_i64(*v),
            Param::Rat(v) => v.serialize(serializer),
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Int(v) => write!(f, "{v}"),
            Param::Rat(v) => write!(f, "{v}"),
        }
    }
}

/// Named parameter values for one grid point.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Binding(BTreeMap<String, Param>);

impl Binding {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, name: &str, value: Param) -> Self {
        self.0.insert(name.to_string(), value);
        self
    }

    pub fn get(&self, name: &str) -> Option<&Param> {
        self.0.get(name)
    }

    /// Integer parameter; panics when absent, since grids are fixed per identity.
    pub fn int(&self, name: &str) -> i64 {
        match self.0.get(name) {
            Some(Param::Int(v)) => *v,
            other => panic!("binding has no integer parameter {name:?} (found {other:?})"),
        }
    }

    /// Rational parameter; integers are promoted.
    pub fn rat(&self, name: &str) -> Rational {
        match self.0.get(name) {
            Some(Param::Rat(v)) => v.clone(),
            Some(Param::Int(v)) => Rational::from(*v),
            None => panic!("binding has no parameter {name:?}"),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&String, &Param)> {
        self.0.iter()
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl Serialize for Binding {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug)]
pub enum Axis {
    /// Inclusive integer range.
    Range {
        name: &'static str,
        lo: i64,
        hi: i64,
    },
    Values {
        name: &'static str,
        values: Vec<Param>,
    },
    /// Several parameters that vary together, e.g. an `(a, b)` fixture pair.
    Tuples {
        names: Vec<&'static str>,
        rows: Vec<Vec<Param>>,
    },
}

impl Axis {
    fn len(&self) -> usize {
        match self {
            Axis::Range { lo, hi, .. } => (hi - lo + 1).max(0) as usize,
            Axis::Values { values, .. } => values.len(),
            Axis::Tuples { rows, .. } => rows.len(),
        }
    }

    fn assign(&self, index: usize, binding: Binding) -> Binding {
        match self {
            Axis::Range { name, lo, .. } => binding.with(name, Param::Int(lo + index as i64)),
            Axis::Values { name, values } => binding.with(name, values[index].clone()),
            Axis::Tuples { names, rows } => names
                .iter()
                .zip(&rows[index])
                .fold(binding, |b, (name, value)| b.with(name, value.clone())),
        }
    }
}

/// Upper-bound overrides for named integer axes (`n`, `m`, `p`, `r`, ...).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridOverrides {
    max: BTreeMap<String, i64>,
}

impl GridOverrides {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn with_max(mut self, axis: &str, max: i64) -> Self {
        self.max.insert(axis.to_string(), max);
        self
    }

    pub fn is_empty(&self) -> bool {
        self.max.is_empty()
    }
}

/// Cartesian product of axes, optionally filtered. Points are enumerated
/// lexicographically with the first axis varying slowest.
#[derive(Clone)]
pub struct Grid {
    axes: Vec<Axis>,
    filter: Option<fn(&Binding) -> bool>,
}

impl fmt::Debug for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Grid")
            .field("axes", &self.axes)
            .field("filtered", &self.filter.is_some())
            .finish()
    }
}

impl Default for Grid {
    fn default() -> Self {
        Self::new()
    }
}

impl Grid {
    pub fn new() -> Self {
        Grid {
            axes: Vec::new(),
            filter: None,
        }
    }

    pub fn range(mut self, name: &'static str, lo: i64, hi: i64) -> Self {
        self.axes.push(Axis::Range { name, lo, hi });
        self
    }

    pub fn values(mut self, name: &'static str, values: Vec<Param>) -> Self {
        self.axes.push(Axis::Values { name, values });
        self
    }

    pub fn rationals(self, name: &'static str, values: Vec<Rational>) -> Self {
        self.values(name, values.into_iter().map(Param::Rat).collect())
    }

    pub fn pairs(
        mut self,
        names: (&'static str, &'static str),
        rows: Vec<(Rational, Rational)>,
    ) -> Self {
        self.axes.push(Axis::Tuples {
            names: vec![names.0, names.1],
            rows: rows
                .into_iter()
                .map(|(x, y)| vec![Param::Rat(x), Param::Rat(y)])
                .collect(),
        });
        self
    }

    /// Keeps only points where `keep` holds.
    pub fn filter(mut self, keep: fn(&Binding) -> bool) -> Self {
        self.filter = Some(keep);
        self
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    /// Replaces the upper bound of each overridden range axis.
    pub fn with_overrides(&self, overrides: &GridOverrides) -> Grid {
        let axes = self
            .axes
            .iter()
            .map(|axis| match axis {
                Axis::Range { name, lo, .. } if overrides.max.contains_key(*name) => Axis::Range {
                    name,
                    lo: *lo,
                    hi: overrides.max[*name],
                },
                other => other.clone(),
            })
            .collect();
        Grid {
            axes,
            filter: self.filter,
        }
    }

    pub fn points(&self) -> Vec<Binding> {
        let sizes: Vec<usize> = self.axes.iter().map(Axis::len).collect();
        if sizes.contains(&0) {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut index = vec![0usize; sizes.len()];
        loop {
            let binding = self
                .axes
                .iter()
                .zip(&index)
                .fold(Binding::new(), |b, (axis, &i)| axis.assign(i, b));
            if self.filter.is_none_or(|keep| keep(&binding)) {
                out.push(binding);
            }
            // advance the odometer, last axis fastest
            let mut pos = sizes.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                index[pos] += 1;
                if index[pos] < sizes[pos] {
                    break;
                }
                index[pos] = 0;
            }
        }
    }

    pub fn cardinality(&self) -> usize {
        match self.filter {
            None => self.axes.iter().map(Axis::len).product(),
            Some(_) => self.points().len(),
        }
    }
}
