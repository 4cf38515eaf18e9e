//! Derived labels: coproduct tags, ordered pairs and quotient block names.

use std::fmt;

use crate::finset::{FinSet, Label};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    L,
    R,
}

/// An element of a disjoint union, rendered `L.x` or `R.y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaggedLabel {
    pub tag: Tag,
    pub base: Label,
}

impl TaggedLabel {
    pub fn new(tag: Tag, base: Label) -> Self {
        TaggedLabel { tag, base }
    }

    pub fn to_label(&self) -> Label {
        Label::derived(self.to_string())
    }

    /// Inverse of rendering. Only the first `.` separates tag from base.
    pub fn parse(label: &Label) -> Option<TaggedLabel> {
        let text = label.as_str();
        let (tag, rest) = match text.split_at_checked(2)? {
            ("L.", rest) => (Tag::L, rest),
            ("R.", rest) => (Tag::R, rest),
            _ => return None,
        };
        if rest.is_empty() {
            return None;
        }
        Some(TaggedLabel::new(tag, Label::derived(rest)))
    }
}

impl fmt::Display for TaggedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = match self.tag {
            Tag::L => 'L',
            Tag::R => 'R',
        };
        write!(f, "{t}.{}", self.base)
    }
}

/// An element of a cartesian product, rendered `(x,y)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairLabel {
    pub left: Label,
    pub right: Label,
}

impl PairLabel {
    pub fn new(left: Label, right: Label) -> Self {
        PairLabel { left, right }
    }

    pub fn to_label(&self) -> Label {
        Label::derived(self.to_string())
    }
}

impl fmt::Display for PairLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.left, self.right)
    }
}

pub fn tag(tag: Tag, base: &Label) -> Label {
    TaggedLabel::new(tag, base.clone()).to_label()
}

pub fn pair(left: &Label, right: &Label) -> Label {
    PairLabel::new(left.clone(), right.clone()).to_label()
}

/// `L`-tagged copy of `x` followed by `R`-tagged copy of `y`.
///
/// Every `L.` label sorts before every `R.` label and tagging preserves
/// order, so `L.x_i` sits at index `i` and `R.y_j` at index `|x| + j`.
pub fn disjoint_union(x: &FinSet, y: &FinSet) -> FinSet {
    let elems = x
        .iter()
        .map(|l| tag(Tag::L, l))
        .chain(y.iter().map(|l| tag(Tag::R, l)))
        .collect();
    FinSet::from_sorted_unique(elems)
}

/// All pairs `(x,y)`. Pair labels sort lexicographically, which need not be
/// row-major when labels are prefixes of each other.
pub fn cartesian(x: &FinSet, y: &FinSet) -> FinSet {
    let elems = x
        .iter()
        .flat_map(|a| y.iter().map(move |b| pair(a, b)))
        .collect();
    FinSet::from_labels_dedup(elems)
}

/// Name of a quotient block: its sorted members joined by `+`. Members that
/// already contain `+` (blocks of blocks) are bracketed to keep names distinct.
pub fn block_name<'a, I>(members: I) -> Label
where
    I: IntoIterator<Item = &'a Label>,
{
    let parts: Vec<String> = members
        .into_iter()
        .map(|m| {
            if m.as_str().contains('+') {
                format!("[{m}]")
            } else {
                m.to_string()
            }
        })
        .collect();
    if parts.len() == 1 {
        // a singleton block keeps its member's label unchanged
        let only = &parts[0];
        let trimmed = only
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .unwrap_or(only);
        return Label::derived(trimmed.to_string());
    }
    Label::derived(parts.join("+"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::set;

    #[test]
    fn tags_never_collide() {
        let x = set(&["1", "2"]);
        let u = disjoint_union(&x, &x);
        assert_eq!(u.len(), 4);
        assert_eq!(u.to_string(), "{L.1,L.2,R.1,R.2}");
        let t = TaggedLabel::parse(u.get(2)).unwrap();
        assert_eq!(t.tag, Tag::R);
        assert_eq!(t.base.as_str(), "1");
    }

    #[test]
    fn pairs_render_with_parens() {
        let p = cartesian(&set(&["1", "2"]), &set(&["p"]));
        assert_eq!(p.to_string(), "{(1,p),(2,p)}");
    }

    #[test]
    fn block_names() {
        let a = Label::new("a").unwrap();
        let b = Label::new("b").unwrap();
        assert_eq!(block_name([&a, &b]).as_str(), "a+b");
        assert_eq!(block_name([&a]).as_str(), "a");
        let ab = block_name([&a, &b]);
        let c = Label::new("c").unwrap();
        assert_eq!(block_name([&ab, &c]).as_str(), "[a+b]+c");
        assert_eq!(block_name([&ab]).as_str(), "a+b");
    }
}
