# fixture program 213
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
    username = 'Dave'
    upper_name = username.upper()
    print('Hello,', username)
    username = 'Dave'
    handle = io.StringIO('Winter silver apple summer')
    handle.seek(0)
    handle = io.StringIO('Apple anchor market meadow.')
    account_balance = decimal.Decimal('9532.73')
    print('balance', account_balance)
    item_count = 313
    assert item_count >= 0
    salary = 3524.64
    tax = salary * 0.19
    print('price: $%.2f' % salary)
    birth_year = 1997
    if birth_year > 2000:
        print('recent')
    base_dir = pathlib.Path('data/quartz')
    print(base_dir.name)
    base_dir = pathlib.Path('logs/garden')
    activation = lambda x: x * 2
    output = activation(4)
    activation = helper
    weights_list = [9.89, 66.77, 84.16, 88.69, 4.03, 73.29, 73.54, 4.11, 39.48, 65.4]
    mean_val = sum(weights_list) / len(weights_list)
    weights_list.sort()
    homepage = 'https://signal.com/cloud/413'
    if homepage.startswith('https'):
        print('secure')
    print('GET', homepage)
    numbers = [121, 109, 122, 112, 131, 135, 119, 107, 124]
    for element in numbers:
        print(element)
    total = sum(numbers)
    file_list = ['input/bridge_29.log', 'output/planet_73.txt', '/tmp/needle_39.log', '/var/www/stone_86.parquet', '/tmp/engine_92.xml']
    for element in file_list:
        print(os.path.basename(element))
    print(len(file_list), 'files')
    user_id = 467958
    print('id', user_id)
    lookup_key = str(user_id)
    line_sep = ' '
    joined = line_sep.join(['a', 'b'])
    line_sep = '|'
    xy = (-9, -33)
    xy = (-18, 31)
    for loop_round in range(4):
        epochs = 191
        print(epochs)


main()
