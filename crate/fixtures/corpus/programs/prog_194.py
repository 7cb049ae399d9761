# fixture program 194
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
    email_address = 'alice.pepper@report.com'
    print('mail to', email_address)
    domain = email_address.split('@')[1]
    is_training = True
    is_training = not is_training
    visited_nodes = {322, 177}
    print(len(visited_nodes))
    visited_nodes.add(7)
    root_dir = pathlib.Path('data/orange')
    print(root_dir.name)
    unit_price = 3165.19
    unit_price = round(unit_price * 1.1, 2)
    print('price: $%.2f' % unit_price)
    api_key = 'agrftLiE'
    print('key length', len(api_key))
    masked = '*' * len(api_key)
    vocab = {'harbor': 1, 'ocean': 43, 'ladder': 37, 'yellow': 50, 'ocean': 42}
    vocab['extra'] = 1
    row_count = 46471
    assert row_count >= 0
    print('count:', row_count)
    matrix = np.zeros((5, 2))
    total = matrix.sum()
    rewards = [13.11]
    rewards.sort()
    for loop_round in range(2):
        birth_year = 1995
        print(birth_year)


main()
