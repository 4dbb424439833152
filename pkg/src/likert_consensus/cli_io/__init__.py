"""CSV ingestion, the end-to-end pipeline, reports and plot data."""
