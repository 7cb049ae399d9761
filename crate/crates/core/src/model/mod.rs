//! Feature encoding and the consistency classifier.

mod checkpoint;
pub mod encode;
pub mod gradcheck;
pub mod network;
pub mod params;
mod train;

pub use encode::{
    assemble_features, encode_length, encode_shape, encode_type, Component, ComponentMask, FeatureBundle,
};
pub use gradcheck::{check_gradients, GradCheckReport};
pub use params::{Group, Hyper, Params};
pub use train::{predict_bundles, train_model, EpochStats, Encoder, Model, TrainConfig, TrainHistory};
