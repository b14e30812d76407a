import io

import pytest

from main import app
from prcompile import compiler
from prcompile.models import ADD, DOUBLE_SUCC, MULT, PRED, SUB


@pytest.fixture(scope="session")
def library_units():
    return {
        "add": compiler.compile(ADD),
        "mult": compiler.compile(MULT),
        "pred": compiler.compile(PRED),
        "sub": compiler.compile(SUB),
        "double_succ": compiler.compile(DOUBLE_SUCC),
    }


# запуск CLI в памяти: (код выхода, stdout, stderr)
@pytest.fixture
def run_cli():
    def run(*argv):
        out, err = io.StringIO(), io.StringIO()
        code = app.run([str(item) for item in argv], out=out, err=err)
        return code, out.getvalue(), err.getvalue()
    return run


@pytest.fixture
def write_file(tmp_path):
    def write(name, text):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write
