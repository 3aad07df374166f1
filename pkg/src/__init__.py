# First-passage percolation speeds on ladder-like graphs
