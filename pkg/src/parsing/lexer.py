from .LexerError import LexerError
from .token import Token


class Lexer:
    def __init__(self, text: str) -> None:
        """
        Initialize the Lexer with the input text and tokenize it.

        Permutation words ("4 1 6", "4,1,6", "416"), pattern lists ("123,132")
        and Dyck words ("uudd", "UUDD", "(())") share this lexer.

        Args:
            text (str): The input text to be lexed.
        """
        self.text: str = text
        self.curPosition: int = 0
        self.tokens: list[Token] = []
        self.lex()

    def lex(self) -> None:
        """
        Perform lexical analysis on the input text and generate tokens.
        """
        while self.curPosition < len(self.text):
            match self.text[self.curPosition]:
                case char if char.isdigit():
                    self.tokens.append(self.read_number())
                    continue
                case char if char.isspace():
                    self.ignoreWhitespaces()
                    continue
                case ",":
                    self.tokens.append(Token("comma", ","))
                case "u" | "U" | "(":
                    self.tokens.append(Token("up", "u"))
                case "d" | "D" | ")":
                    self.tokens.append(Token("down", "d"))
                case _:
                    raise LexerError("Invalid character", self.curPosition+1)

            self.curPosition += 1

    def read_number(self) -> Token:
        """
        Read a run of digits from the input text.

        The digits are kept as text: a lone run like "4162735" is a compact
        permutation, so the parser decides how to split it.

        Returns:
            Token: The token representing the digit run.
        """
        digits: str = ""
        while self.curPosition < len(self.text) and self.text[self.curPosition].isdigit():
            digits += self.text[self.curPosition]
            self.curPosition += 1
        return Token("number", digits)

    def ignoreWhitespaces(self) -> None:
        """
        Ignore whitespace characters in the input text.
        """
        while self.curPosition < len(self.text) and self.text[self.curPosition].isspace():
            self.curPosition += 1
