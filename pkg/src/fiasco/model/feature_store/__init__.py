"""Feature-vector datasets standing in for extracted image features."""

from .dataset import FeatureDataset, LabeledBatch
from .feature_file import load_dataset, write_dataset, read_class_names, write_class_names
from .synthetic import gen_synthetic, split_stratified
from .source import load_source
