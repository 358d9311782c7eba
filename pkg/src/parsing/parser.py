from .ParserError import ParserError
from .token import Token


class Parser:
    def __init__(self, tokens: list[Token]) -> None:
        """
        Initialize the parser with a list of tokens.

        Args:
            tokens (list[Token]): The list of tokens to parse.
        """
        self.tokens = tokens
        self.curToken = 0

    def parse_entries(self) -> list[int]:
        """
        Parse a one-line word such as "4 1 6 2", "4,1,6,2" or "4162".

        A single digit run with no separators is read digit by digit, which is
        only meaningful for words of length at most 9.

        Returns:
            list[int]: The entries in order.
        """
        groups = self.parseGroups()
        if len(groups) == 1 and len(groups[0]) > 1:
            return [int(digit) for digit in groups[0]]
        return [int(group) for group in groups]

    def parse_compact_list(self) -> list[list[int]]:
        """
        Parse a comma separated list of compact words such as "123,132".

        Returns:
            list[list[int]]: One digit list per item.
        """
        return [[int(digit) for digit in group] for group in self.parseGroups()]

    def parse_steps(self) -> str:
        """
        Parse a Dyck word into its lowercase step string.

        Returns:
            str: The steps as a string over "u" and "d".
        """
        steps: str = ""
        while self.curToken < len(self.tokens):
            token = self.tokens[self.curToken]
            if token.type not in ("up", "down"):
                raise ParserError(
                    f"Unexpected {token.type} {token.value!r} in a Dyck word")
            steps += token.value
            self.curToken += 1
        return steps

    def parseGroups(self) -> list[str]:
        groups: list[str] = []
        expectNumber = True
        while self.curToken < len(self.tokens):
            token = self.tokens[self.curToken]
            self.curToken += 1
            match token.type:
                case "number":
                    groups.append(token.value)
                    expectNumber = False
                case "comma":
                    if expectNumber:
                        raise ParserError("Empty entry before comma")
                    expectNumber = True
                case _:
                    raise ParserError(
                        f"Unexpected {token.type} step in a permutation")

        if groups and expectNumber:
            # a trailing comma leaves an empty last entry
            raise ParserError("Empty entry after comma")
        return groups
