//! Labels and finite sets, the objects of the category.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// The label of the single point of the terminal object.
pub const POINT: &str = "•";

const RESERVED: &[char] = &[
    '{', '}', '(', ')', ',', '.', '+', '#', '=', ':', '[', ']', '•',
];

/// An opaque element token. Ordered by byte-wise comparison of its text.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(Arc<str>);

impl Label {
    /// Validates a user-supplied token.
    pub fn new(text: &str) -> Result<Self> {
        if Self::is_valid(text) {
            Ok(Label(Arc::from(text)))
        } else {
            Err(Error::InvalidLabel(text.to_string()))
        }
    }

    pub fn is_valid(text: &str) -> bool {
        !text.is_empty()
            && !text.contains("->")
            && !text
                .chars()
                .any(|c| c.is_whitespace() || c.is_control() || RESERVED.contains(&c))
    }

    /// Labels built by constructions (tags, pairs, quotient blocks) may
    /// contain reserved punctuation; they never come from user input.
    pub(crate) fn derived(text: impl Into<Arc<str>>) -> Self {
        Label(text.into())
    }

    pub fn point() -> Self {
        Label::derived(POINT)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A finite set of distinct labels, kept sorted so that equal sets have
/// equal representations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FinSet {
    elems: Arc<[Label]>,
}

impl FinSet {
    /// Builds an object from a sequence of labels, rejecting duplicates.
    pub fn new<I>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = Label>,
    {
        let mut elems: Vec<Label> = labels.into_iter().collect();
        elems.sort();
        if let Some(w) = elems.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].to_string()));
        }
        Ok(FinSet {
            elems: elems.into(),
        })
    }

    /// Parses and validates each token.
    pub fn from_strs<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let labels = labels
            .iter()
            .map(|s| Label::new(s.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        FinSet::new(labels)
    }

    /// Builds from labels already known to be distinct after sorting.
    pub(crate) fn from_sorted_unique(elems: Vec<Label>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        FinSet {
            elems: elems.into(),
        }
    }

    pub(crate) fn from_labels_dedup(mut elems: Vec<Label>) -> Self {
        elems.sort();
        elems.dedup();
        FinSet::from_sorted_unique(elems)
    }

    pub fn empty() -> Self {
        FinSet::default()
    }

    /// The one-point terminal object `{•}`.
    pub fn terminal() -> Self {
        FinSet::from_sorted_unique(vec![Label::point()])
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[Label] {
        &self.elems
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Label> {
        self.elems.iter()
    }

    pub fn get(&self, index: usize) -> &Label {
        &self.elems[index]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.elems.binary_search(label).ok()
    }

    pub fn index_of_str(&self, label: &str) -> Option<usize> {
        self.elems.binary_search_by(|l| l.as_str().cmp(label)).ok()
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.index_of(label).is_some()
    }

    pub(crate) fn require(&self, label: &Label) -> Result<usize> {
        self.index_of(label).ok_or_else(|| Error::UnknownLabel {
            label: label.to_string(),
            object: self.joined(),
        })
    }

    pub fn is_subset_of(&self, other: &FinSet) -> bool {
        self.iter().all(|l| other.contains(l))
    }

    pub(crate) fn joined(&self) -> String {
        let parts: Vec<&str> = self.iter().map(Label::as_str).collect();
        parts.join(",")
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.joined())
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> IntoIterator for &'a FinSet {
    type Item = &'a Label;
    type IntoIter = std::slice::Iter<'a, Label>;

    fn into_iter(self) -> Self::IntoIter {
        self.iter()
    }
}

/// Shorthand used throughout the tests: `set(&["a", "b"])`.
pub fn set(labels: &[&str]) -> FinSet {
    FinSet::from_strs(labels).expect("valid labels")
}
