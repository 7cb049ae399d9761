# fixture program 031
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    age = 4
    print('age', age)
    if age >= 18:
        print('adult')
    age = 52
    line_sep = ':'
    joined = line_sep.join(['a', 'b'])
    num_rows = 40602
    num_rows += 1
    if num_rows > 10:
        print('many')
    endpoint = 'https://castle.org/quartz/900'
    host = endpoint.split('/')[2]
    person = {'name': 'Oslo', 'age': 37, 'city': 'warsaw'}
    print(person['name'])
    seen_ids = {64, 317, 461, 384, 177, 8}
    seen_ids.add(7)
    current_node = None
    if current_node is None:
        print('empty')
    current_node = None
    account_number = 821807
    lookup_key = str(account_number)
    print('id', account_number)
    sender = 'grace.candle@candle.com'
    print('mail to', sender)
    domain = sender.split('@')[1]
    sender = 'oscar.river@pepper.com'
    a = 400
    k = 212
    for loop_round in range(2):
        position = 123
        print(position)


main()
