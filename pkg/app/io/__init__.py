from app.io.document import (
    build_document,
    cycles_from_doc,
    drawing_from_doc,
    embedding_from_doc,
    emit_json,
    graph_from_doc,
    layers_from_doc,
    load_document,
    result_from_doc,
)
from app.io.formats import (
    parse_ezi,
    parse_gm1,
    parse_gr1,
    parse_grf,
    read_text,
    write_ezi,
    write_gm1,
    write_gm2,
    write_gr1,
    write_grf,
)
from app.io.render import emit_svg

__all__ = [
    "build_document",
    "cycles_from_doc",
    "drawing_from_doc",
    "embedding_from_doc",
    "emit_json",
    "emit_svg",
    "graph_from_doc",
    "layers_from_doc",
    "load_document",
    "parse_ezi",
    "parse_gm1",
    "parse_gr1",
    "parse_grf",
    "read_text",
    "result_from_doc",
    "write_ezi",
    "write_gm1",
    "write_gm2",
    "write_gr1",
    "write_grf",
]
