pub mod assembly;
pub mod config;
pub mod device;
pub mod experiment;
pub mod linalg;
pub mod mesh;
pub mod observables;
pub mod physics;
pub mod solver;
pub mod study;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/model.md")]
    mod model {}
    #[doc = include_str!("../../../book/src/configuration.md")]
    mod configuration {}
    #[doc = include_str!("../../../book/src/library.md")]
    mod library {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
