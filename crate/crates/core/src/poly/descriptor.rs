use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use super::PolyError;
use crate::arith::field_name;

/// A polynomial variable with its degree weight and torsion weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Variable {
    pub name: String,
    pub degree: u32,
    /// Torsion weight, reduced modulo the descriptor's torsion order.
    pub weight: u32,
}

impl Variable {
    /// Degree-0 variables stand for symbolic coefficients.
    pub fn is_parameter(&self) -> bool {
        self.degree == 0
    }
}

/// Variables of a bi-graded polynomial ring, the torsion order `d` of the
/// ℤ/d grading, and the cyclotomic order of the coefficient field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    vars: Vec<Variable>,
    torsion_order: u32,
    field_order: u32,
}

impl RingDescriptor {
    /// Builds a descriptor from `(name, degree, torsion weight)` triples.
    pub fn new<S: Into<String>>(
        vars: impl IntoIterator<Item = (S, u32, u32)>,
        torsion_order: u32,
        field_order: u32,
    ) -> Result<Arc<Self>, PolyError> {
        if torsion_order == 0 {
            return Err(PolyError::InvalidDescriptor("torsion order must be at least 1".into()));
        }
        if ![1, 3, 4, 5].contains(&field_order) {
            return Err(PolyError::InvalidDescriptor(format!(
                "unsupported field {}",
                field_name(field_order)
            )));
        }
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (name, degree, weight) in vars {
            let name: String = name.into();
            if name.is_empty() || !name.chars().next().unwrap().is_ascii_alphabetic() {
                return Err(PolyError::InvalidDescriptor(format!("invalid variable name '{name}'")));
            }
            if name.len() == 2 && name.starts_with('z') && matches!(&name[1..], "3" | "4" | "5") {
                return Err(PolyError::InvalidDescriptor(format!(
                    "variable name '{name}' is reserved for roots of unity"
                )));
            }
            if !seen.insert(name.clone()) {
                return Err(PolyError::InvalidDescriptor(format!("duplicate variable '{name}'")));
            }
            let weight = weight % torsion_order;
            if degree == 0 && weight != 0 {
                return Err(PolyError::InvalidDescriptor(format!(
                    "parameter '{name}' must have torsion weight 0"
                )));
            }
            out.push(Variable { name, degree, weight });
        }
        Ok(Arc::new(RingDescriptor { vars: out, torsion_order, field_order }))
    }

    pub fn vars(&self) -> &[Variable] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn var(&self, i: usize) -> &Variable {
        &self.vars[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.name == name)
    }

    pub fn torsion_order(&self) -> u32 {
        self.torsion_order
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn has_parameters(&self) -> bool {
        self.vars.iter().any(Variable::is_parameter)
    }

    /// Indices of degree-0 variables.
    pub fn parameter_indices(&self) -> Vec<usize> {
        (0..self.vars.len()).filter(|&i| self.vars[i].is_parameter()).collect()
    }

    /// The descriptor with all degree-0 variables removed.
    pub fn without_parameters(&self) -> Arc<Self> {
        Arc::new(RingDescriptor {
            vars: self.vars.iter().filter(|v| !v.is_parameter()).cloned().collect(),
            torsion_order: self.torsion_order,
            field_order: self.field_order,
        })
    }

    /// Same variables over a different coefficient field.
    pub fn with_field_order(&self, field_order: u32) -> Result<Arc<Self>, PolyError> {
        RingDescriptor::new(
            self.vars.iter().map(|v| (v.name.clone(), v.degree, v.weight)),
            self.torsion_order,
            field_order,
        )
    }

    /// Parses the descriptor file format: header lines `torsion_order d` and
    /// `field Q|Q(z3)|Q(z4)|Q(z5)`, then one `name degree torsion_weight` line
    /// per variable. `#` starts a comment.
    pub fn parse(text: &str) -> Result<Arc<Self>, PolyError> {
        let mut torsion_order = 1;
        let mut field_order = 1;
        let mut vars = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| PolyError::InvalidDescriptor(format!("line {}: {msg}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["torsion_order", d] => {
                    torsion_order = d.parse().map_err(|_| bad("torsion order must be an integer"))?;
                }
                ["field", f] => {
                    field_order = match *f {
                        "Q" => 1,
                        "Q(z3)" => 3,
                        "Q(z4)" => 4,
                        "Q(z5)" => 5,
                        _ => return Err(bad("field must be one of Q, Q(z3), Q(z4), Q(z5)")),
                    };
                }
                [name, degree, weight] => {
                    let degree: u32 = degree.parse().map_err(|_| bad("degree must be a natural number"))?;
                    let weight: i64 = weight.parse().map_err(|_| bad("torsion weight must be an integer"))?;
                    vars.push((name.to_string(), degree, weight));
                }
                _ => return Err(bad("expected 'name degree torsion_weight'")),
            }
        }
        if torsion_order == 0 {
            return Err(PolyError::InvalidDescriptor("torsion order must be at least 1".into()));
        }
        let d = torsion_order as i64;
        RingDescriptor::new(
            vars.into_iter().map(|(n, deg, w)| (n, deg, w.rem_euclid(d) as u32)),
            torsion_order,
            field_order,
        )
    }
}

impl fmt::Display for RingDescriptor {
    /// Writes the descriptor file format accepted by [`RingDescriptor::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "field {}", field_name(self.field_order))?;
        writeln!(f, "torsion_order {}", self.torsion_order)?;
        for v in &self.vars {
            writeln!(f, "{} {} {}", v.name, v.degree, v.weight)?;
        }
        Ok(())
    }
}
