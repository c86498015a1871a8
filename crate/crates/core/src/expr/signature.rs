use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::PRODUCT;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpSpec {
    pub symbol: String,
    pub arity: usize,
}

/// Operation symbols with their arities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    ops: Vec<OpSpec>,
    #[serde(default)]
    pub unitary: bool,
}

impl Signature {
    pub fn new<S: Into<String>>(
        ops: impl IntoIterator<Item = (S, usize)>,
        unitary: bool,
    ) -> Result<Self> {
        let ops: Vec<OpSpec> = ops
            .into_iter()
            .map(|(s, a)| OpSpec {
                symbol: s.into(),
                arity: a,
            })
            .collect();
        let sig = Signature { ops, unitary };
        sig.validate()?;
        Ok(sig)
    }

    pub fn validate(&self) -> Result<()> {
        for (i, op) in self.ops.iter().enumerate() {
            if op.arity < 2 {
                return Err(Error::Signature(format!(
                    "`{}` has arity {} (< 2)",
                    op.symbol, op.arity
                )));
            }
            if self.ops[..i].iter().any(|o| o.symbol == op.symbol) {
                return Err(Error::Signature(format!("duplicate symbol `{}`", op.symbol)));
            }
        }
        Ok(())
    }

    /// One binary product `*`.
    pub fn magmatic(unitary: bool) -> Self {
        Signature {
            ops: vec![OpSpec {
                symbol: PRODUCT.into(),
                arity: 2,
            }],
            unitary,
        }
    }

    pub fn ops(&self) -> &[OpSpec] {
        &self.ops
    }

    pub fn arity(&self, symbol: &str) -> Option<usize> {
        self.ops.iter().find(|o| o.symbol == symbol).map(|o| o.arity)
    }

    pub fn is_binary_only(&self) -> bool {
        self.ops.iter().all(|o| o.arity == 2)
    }

    /// Adds `symbol` if missing; errors if present with another arity.
    pub fn with_op(mut self, symbol: &str, arity: usize) -> Result<Self> {
        match self.arity(symbol) {
            Some(a) if a == arity => Ok(self),
            Some(a) => Err(Error::Arity {
                symbol: symbol.into(),
                expected: a,
                got: arity,
            }),
            None => {
                self.ops.push(OpSpec {
                    symbol: symbol.into(),
                    arity,
                });
                self.validate()?;
                Ok(self)
            }
        }
    }
}
