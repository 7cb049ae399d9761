# fixture program 208
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
    num_samples = 37
    if num_samples > 10:
        print('many')
    print('count:', num_samples)
    previous = None
    if previous is None:
        print('empty')
    keywords = set(['number'])
    print('apple' in keywords)
    print(len(keywords))
    email = 'carol.report@forest.com'
    print('mail to', email)
    domain = email.split('@')[1]
    email = 'judy.tunnel@dragon.com'
    balance = decimal.Decimal('2470.22')
    print('balance', balance)
    verbose = False
    if not verbose:
        print('no')
    target_size = (64, 64)
    width, height = target_size
    print('size', target_size)
    birthday = '2002-03-17'
    print('date', birthday)
    birthday = '2009-05-25'
    payload = 'Wizard vector pepper meadow ocean falcon bridge wizard number?'.encode()
    decoded = payload.decode()
    elapsed = 111.913
    print('took %.2fs' % elapsed)
    minutes = elapsed / 60
    rewards = [4.72]
    rewards.sort()
    root_dir = pathlib.Path('data/signal')
    target_file = root_dir / 'out.csv'
    print(root_dir.name)
    fn = '../data/needle_22.parquet'
    for loop_round in range(4):
        offset = 278
        print(offset)


main()
