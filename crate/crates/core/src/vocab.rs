//! Statement vocabularies: interned names with a fixed declaration order.

use std::collections::HashMap;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VocabError {
    #[error("duplicate statement `{0}`")]
    Duplicate(String),
    #[error("statement names must be non-empty")]
    EmptyName,
}

/// The ordered set of statements of a framework.
///
/// Iteration order is declaration order everywhere; all set-valued output
/// in the crate is reported in this order, which keeps runs diffable.
#[derive(Debug, Clone)]
pub struct Vocabulary {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    pub fn new<I, S>(names: I) -> Result<Self, VocabError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(VocabError::EmptyName);
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(VocabError::Duplicate(name.clone()));
            }
        }
        Ok(Vocabulary { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Names in declaration order.
    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(String::as_str)
    }
}

impl PartialEq for Vocabulary {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
    }
}

impl Eq for Vocabulary {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn declaration_order_is_kept() {
        let v = Vocabulary::new(["b", "a", "z"]).unwrap();
        assert_eq!(v.names().collect::<Vec<_>>(), vec!["b", "a", "z"]);
        assert_eq!(v.index_of("z"), Some(2));
        assert_eq!(v.index_of("q"), None);
    }

    #[test]
    fn rejects_duplicates_and_empty() {
        assert_eq!(
            Vocabulary::new(["a", "a"]),
            Err(VocabError::Duplicate("a".into()))
        );
        assert_eq!(Vocabulary::new(["a", ""]), Err(VocabError::EmptyName));
    }

    #[test]
    fn zero_statements_is_legal() {
        let v = Vocabulary::new(Vec::<String>::new()).unwrap();
        assert!(v.is_empty());
    }
}
