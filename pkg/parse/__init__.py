# /project/parse/__init__.py
from parse.parse_ccx import (
    DocumentParser,
    emit_complex,
    emit_map,
    emit_wallspace,
    load_automorphism,
    load_complex,
    load_wallspace,
    read_file,
    write_file,
)
