//! Minimal gradient-based learning stack for the activity benchmarks.
//!
//! Feature extraction over clips, a softmax MLP classifier with hand-derived
//! gradients (every gradient path is finite-difference checkable), and a
//! domain-adversarial trainer built around a gradient-reversal connection
//! implementing the main-minus-λ-domain training objective.
//!
//! Training loops are single-owner and sequential over batches; trained
//! models are immutable and safe to share across threads afterward.

pub mod adversarial;
pub mod classifier;
pub mod error;
pub mod features;
pub mod mlp;

pub use adversarial::{
    action_accuracy, adversarial_batch_gradients, adversarial_train, discriminator_accuracy,
    domain_of, history_to_csv, stage2_loss, AdversarialConfig, AdversarialOutcome, Domain,
    DomainSample, EpochStats, FeatureMapper, DEFAULT_DOMAIN_WEIGHT,
};
pub use classifier::{
    dataset_loss, train_classifier, ClassifierModel, Normalizer, TrainConfig, TrainedClassifier,
};
pub use error::{LearnError, Result};
pub use features::{extract_features, feature_names, FEATURE_DIM};
pub use mlp::{cross_entropy, softmax, Linear, SoftmaxMlp};
