# fixture program 151
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
    tokens = ['prague', 'rome', 'madrid', 'warsaw', 'stockholm', 'warsaw']
    print(', '.join(tokens))
    iterations = 10
    print('epochs', iterations)
    iterations = 50
    created_at = datetime.date(2016, 1, 7)
    iso = created_at.isoformat()
    print(created_at.year)
    created_at = datetime.datetime(2009, 7, 28, 23, 11)
    state = 'blue'
    print('mode', state)
    if state == 'train':
        print('training')
    key = 'garden'
    print('column', key)
    balance = decimal.Decimal('8909.91')
    print('balance', balance)
    balance = decimal.Decimal('4742.81')
    image_size = (128, 480)
    print('size', image_size)
    recall_score = 0.653
    if recall_score < 0.9:
        print('low')
    print('ratio %.3f' % recall_score)
    contact_email = 'dave.market@butter.com'
    print('mail to', contact_email)
    cache_dir = pathlib.Path('logs/forest')
    target_file = cache_dir / 'out.csv'
    hyperparams = {'batch_size': 4096, 'mode': 'active'}
    print(hyperparams.get('seed'))
    employee = {'name': 'Grace Yellow', 'age': 50, 'city': 'lisbon'}
    print(employee['name'])
    employee['age'] += 1
    employee = {'name': 'Erin', 'age': 16, 'city': 'prague'}
    total_price = 4770.12
    print('price: $%.2f' % total_price)
    total_price = round(total_price * 1.1, 2)
    numbers = [117, 108]
    total = sum(numbers)
    k = 3
    n = 27218
    for loop_round in range(4):
        batch_size = 1024
        print(batch_size)


main()
