import sys

from cli.router import CommandApp
from ordinals.routers import router as ordinals_router
from ktree.routers import router as ktree_router
from erdos.routers import router as erdos_router
from bounds.routers import router as bounds_router
from termlang.routers import router as termlang_router
from prcompile.routers import router as prcompile_router


app = CommandApp(
    title='OmegaBound'
)

app.include_router(ordinals_router, tags=['Ordinals'])
app.include_router(ktree_router, tags=['Trees'])
app.include_router(erdos_router, tags=['Erdos trees'])
app.include_router(bounds_router, tags=['Bounds'])
app.include_router(termlang_router, tags=['Programs'])
app.include_router(prcompile_router, tags=['Compiler'])


# запуск из командной строки
if __name__ == "__main__":
    sys.exit(app.run())
