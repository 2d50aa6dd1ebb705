"""Domain layer: dataset, projections, catalog, costing, scheduling, emissions and scenarios."""
