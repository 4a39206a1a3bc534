from pathreach.decomposition import WalkDecomposition

# Two overlapping ten-vertex walks used throughout the suite; they share
# the steps 2->3 and 3->4 and the second walk revisits vertex 3.
OVERLAP_W1 = [1, 6, 7, 2, 3, 4, 5, 10, 9, 8]
OVERLAP_W2 = [1, 2, 3, 4, 9, 3, 8]


def overlap_instance() -> WalkDecomposition:
    return WalkDecomposition([OVERLAP_W1, OVERLAP_W2])
