# fixture program 060
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
    website = 'https://pepper.com/jungle/756'
    if website.startswith('https'):
        print('secure')
    host = website.split('/')[2]
    numbers = [7, 13, 13, 18, 19, 1, 34, 21, 30]
    numbers.append(1)
    numbers = [2029]
    settings = {'name': 'Mallory', 'verbose': True, 'batch_size': 8, 'lr': 0.3, 'seed': 787367}
    settings['debug'] = False
    settings = {'mode': 'green', 'path': 'output/signal_18.parquet'}
    max_steps = 200
    print('epochs', max_steps)
    for step_number in range(min(max_steps, 2)):
        print(step_number)
    recent_items = collections.deque([14, 23, 33, 11, 30, 15, 21, 5, 11], maxlen=10)
    recent_items.append(5)
    print(len(recent_items))
    encoded = 'Tunnel stone!'.encode()
    print(len(encoded))
    start_time = datetime.date(2008, 4, 7)
    print(start_time.year)
    transform = lambda x: x + 1
    output = transform(4)
    print(callable(transform))
    transform = helper
    username = 'Carol Meadow'
    upper_name = username.upper()
    numbers_range = range(0, 97)
    print(list(numbers_range)[:3])
    numbers_range = range(1, 79)
    text = 'Yellow apple yellow winter needle silver engine pepper ocean?'
    text = text.strip()
    text = 'Vector zebra butter number market?'
    is_training = False
    if not is_training:
        print('no')
    foreground = (237, 149, 65)
    red_channel = foreground[0]
    x = 232.77
    n = 1
    a = 263
    for loop_round in range(2):
        total_count = 19
        print(total_count)


main()
