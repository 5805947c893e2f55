"""Two ways to decide whether two matrices overlap."""
from snomat import BlockPartition, Matrix, frame_of_block, overlap_by_partition, overlap_by_translation

A = Matrix.of(["12112", "01030", "32102", "01313"])
B = Matrix.of(["21", "11", "03"])

# slide B over A; a witness names the offset and the shared rectangle
t = overlap_by_translation(A, B)
print("offset", t.offset, "rect", t.rect)

# the same answer phrased with block partitions and frames
p = overlap_by_partition(A, B)
print(p)
print(frame_of_block(BlockPartition(1, 3, (), (1, 2)), 1, 2))

# equal top-left corners are not enough
C = Matrix.of(["123", "011", "103"])
print(overlap_by_translation(A, C), overlap_by_partition(A, C))
