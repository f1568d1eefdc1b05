"""Domain model: features, memory, selection, classifier, navigation, world."""
