use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("config line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error(transparent)]
    Crystal(#[from] crystal::CrystalError),
    #[error(transparent)]
    Gqe(#[from] gqe::GqeError),
    #[error(transparent)]
    Rep(#[from] repmod::RepError),
    #[error(transparent)]
    Root(#[from] rootdata::RootError),
    #[error(transparent)]
    Lang(#[from] langint::LangError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
