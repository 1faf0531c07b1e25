"""Domain models: graphs, statistics, metrics, sampling, distributions, manifests and errors."""
