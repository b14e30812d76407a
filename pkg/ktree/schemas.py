from typing import Optional

from cli.schemas import CommandOut


class TreeHeightOut(CommandOut):
    k: int
    alpha: str
    tree: Optional[str] = None
    height: str

    def human(self) -> str:
        return self.height
