from app.embed.rotation import (
    Embedding,
    EmbeddingReport,
    RotationSystem,
    common_faces,
    corner_before,
    cycles_to_rotation,
    face_darts,
    insert_edge_in_face,
    insert_segment,
    trace_faces,
    verify_embedding,
)

__all__ = [
    "Embedding",
    "EmbeddingReport",
    "RotationSystem",
    "common_faces",
    "corner_before",
    "cycles_to_rotation",
    "face_darts",
    "insert_edge_in_face",
    "insert_segment",
    "trace_faces",
    "verify_embedding",
]
