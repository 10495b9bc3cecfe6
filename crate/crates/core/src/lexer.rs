//! Shared token stream for the expression grammars (rational terms and
//! symbolic constants). Tracks byte positions for error reporting.

use crate::error::ParseError;
use rug::Integer;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq)]
pub enum Token {
    Int(Integer),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

pub struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
    tok: Token,
    tok_pos: usize,
}

impl<'a> Lexer<'a> {
    pub fn new(text: &'a str) -> Self {
        Lexer { src: text.as_bytes(), pos: 0, tok: Token::End, tok_pos: 0 }
    }

    pub fn token(&self) -> &Token {
        &self.tok
    }

    pub fn token_pos(&self) -> usize {
        self.tok_pos
    }

    pub fn at_end(&self) -> bool {
        self.tok == Token::End
    }

    pub fn err(&self, message: &str) -> ParseError {
        ParseError::Syntax { pos: self.tok_pos, message: message.to_string() }
    }

    pub fn advance(&mut self) -> Result<(), ParseError> {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
        self.tok_pos = self.pos;
        if self.pos >= self.src.len() {
            self.tok = Token::End;
            return Ok(());
        }
        let c = self.src[self.pos];
        self.tok = match c {
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'/' => Token::Slash,
            b'^' => Token::Caret,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b',' => Token::Comma,
            b'0'..=b'9' => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.tok = Token::Int(Integer::from_str(text).unwrap());
                return Ok(());
            }
            b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let text = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                self.tok = Token::Ident(text.to_string());
                return Ok(());
            }
            _ => {
                return Err(ParseError::Syntax {
                    pos: self.pos,
                    message: format!("unexpected character {:?}", c as char),
                })
            }
        };
        self.pos += 1;
        Ok(())
    }
}
