use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cover ({low}, {high}) does not raise rank by exactly one")]
    NotGraded { low: usize, high: usize },
    #[error("cover ({low}, {high}) appears more than once")]
    DuplicateCover { low: usize, high: usize },
    #[error("element index {index} out of range for {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("size {requested} exceeds the limit of {limit}")]
    TooLarge { requested: usize, limit: usize },
    #[error("edge ({low}, {high}) is not a cover of the target poset")]
    ImageNotCover { low: usize, high: usize },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("group order exceeds the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("generator {0} is not an involution")]
    NotInvolutions(String),
    #[error("generators {0} and {1} do not commute")]
    NotCommuting(String, String),
    #[error("multiplication table is not a group: {0}")]
    NotAGroup(String),
    #[error("not a rooted tree: {0}")]
    NotATree(String),
    #[error("generator {index} is not a rank-preserving automorphism: {reason}")]
    NotAnAutomorphism { index: usize, reason: String },
    #[error("generator images do not define a group action: {0}")]
    InconsistentAction(String),
    #[error("action is not an induced action on a boolean algebra")]
    NotBoolean,
    #[error("quotient group is not the standard S_m wreath S_l")]
    WrongGroup,
    #[error("chain {chain} is not saturated in the image poset")]
    ImageChainNotSaturated { chain: usize },
    #[error("invalid chain decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
