use std::io;
use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },

    #[error("{}: invalid UTF-8 at byte {offset}", path.display())]
    Decode { path: PathBuf, offset: usize },

    /// A core error raised while reading a particular file.
    #[error("{}: {source}", path.display())]
    File {
        path: PathBuf,
        source: letternet_core::Error,
    },

    #[error(transparent)]
    Core(#[from] letternet_core::Error),

    #[error("{}: {message}", path.display())]
    Manifest { path: PathBuf, message: String },

    #[error("configuration: {0}")]
    Config(String),

    #[error("{}: gold file contains no triples", .0.display())]
    EmptyGold(PathBuf),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn in_file(path: impl Into<PathBuf>) -> impl FnOnce(letternet_core::Error) -> Error {
        let path = path.into();
        move |source| Error::File { path, source }
    }
}
