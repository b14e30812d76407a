from cli.schemas import CommandOut


class OrdinalOut(CommandOut):
    expression: str
    value: str

    def human(self) -> str:
        return self.value
