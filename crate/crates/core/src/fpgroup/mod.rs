//! Finitely presented groups: words, presentations, quotients, amalgamation,
//! abelianization and triviality certificates.

mod eliminate;
mod presentation;
mod snf;
mod word;

pub use eliminate::{
    eliminate_to_trivial, replay_certificate, CertificateStatus, EliminationStep, TrivialityCertificate, DEFAULT_BUDGET,
};
pub use presentation::{abelianization, add_relators, amalgamate, AbelianInvariants, Presentation};
pub use snf::smith_normal_form;
pub use word::{commutator, free_reduce, Letter, Word};
