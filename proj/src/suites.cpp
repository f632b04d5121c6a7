namespace tannakit {}
